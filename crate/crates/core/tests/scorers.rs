// SPDX-License-Identifier: Apache-2.0
mod common;

use common::{corpus_instance, dense_scores, index_of, oracle};
use guiloc_core::Scorer;
use proptest::prelude::*;

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn hand_computed_bm25() {
    // d1 = {alpha, bravo}, d2 = {bravo}, query [alpha]:
    // idf = ln(1 + 1.5 / 1.5) = ln 2; tf part = 2.2 / (1 + 1.2 * (0.25 + 0.75 * 2 / 1.5)) = 0.88.
    let docs = vec![strs(&["alpha", "bravo"]), strs(&["bravo"])];
    let index = index_of(&docs);
    let list = index.rank(&strs(&["alpha"]), Scorer::Bm25);
    assert_eq!(list.len(), 1);
    assert!((list.entries[0].score - 0.6100).abs() < 1e-4);
    assert!((list.entries[0].score - 2f64.ln() * 0.88).abs() < 1e-12);
}

proptest! {
    #[test]
    fn bm25_matches_dense_reference((docs, query) in corpus_instance()) {
        let index = index_of(&docs);
        let got = dense_scores(&index, &index.rank(&query, Scorer::Bm25));
        let want = oracle::bm25(&docs, &query, 1.2, 0.75);
        for (g, w) in got.iter().zip(&want) {
            prop_assert!((g - w).abs() < 1e-9, "{g} vs {w}");
        }
    }

    #[test]
    fn rvsm_matches_dense_reference((docs, query) in corpus_instance()) {
        let index = index_of(&docs);
        let got = dense_scores(&index, &index.rank(&query, Scorer::Rvsm));
        let want = oracle::rvsm(&docs, &query);
        for (g, w) in got.iter().zip(&want) {
            prop_assert!((g - w).abs() < 1e-9, "{g} vs {w}");
        }
    }

    #[test]
    fn rankings_are_ordered_and_positive((docs, query) in corpus_instance()) {
        let index = index_of(&docs);
        for scorer in Scorer::ALL {
            let list = index.rank(&query, scorer);
            prop_assert!(list.is_score_ordered());
            prop_assert!(list.has_unique_paths());
            prop_assert!(list.entries.iter().all(|e| e.score > 0.0));
        }
    }
}
