// SPDX-License-Identifier: Apache-2.0
//! Shared helpers for integration tests: brute-force reference
//! implementations, random instance generators and the bundled fixture.
//!
//! The references below deliberately avoid the library's data structures:
//! they work on plain token lists and recompute every statistic by scanning.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use guiloc_core::eval::Dataset;
use guiloc_core::{scan_corpus, CorpusIndex, Preprocessor, ScanOptions, ScoringParams};
use proptest::prelude::*;

pub mod oracle {
    use std::collections::BTreeSet;

    pub fn hits_at_k(ranking: &[String], truth: &BTreeSet<String>, k: usize) -> u8 {
        let top = &ranking[..k.min(ranking.len())];
        top.iter().any(|p| truth.contains(p)) as u8
    }

    pub fn reciprocal_rank(ranking: &[String], truth: &BTreeSet<String>) -> f64 {
        for (i, p) in ranking.iter().enumerate() {
            if truth.contains(p) {
                return 1.0 / (i + 1) as f64;
            }
        }
        0.0
    }

    /// Average precision by enumerating every prefix of the ranking and
    /// taking precision at the prefixes that end on a relevant item.
    pub fn average_precision(ranking: &[String], truth: &BTreeSet<String>) -> f64 {
        let mut total = 0.0;
        for end in 1..=ranking.len() {
            let prefix = &ranking[..end];
            if !truth.contains(&prefix[end - 1]) {
                continue;
            }
            let relevant = prefix.iter().filter(|p| truth.contains(*p)).count();
            total += relevant as f64 / end as f64;
        }
        total / truth.len() as f64
    }

    fn count(doc: &[String], term: &str) -> usize {
        doc.iter().filter(|t| *t == term).count()
    }

    fn df(docs: &[Vec<String>], term: &str) -> usize {
        docs.iter().filter(|d| count(d, term) > 0).count()
    }

    /// BM25 for every document, summing one contribution per query token.
    pub fn bm25(docs: &[Vec<String>], query: &[String], k1: f64, b: f64) -> Vec<f64> {
        let n = docs.len() as f64;
        let avg = docs.iter().map(Vec::len).sum::<usize>() as f64 / n;
        docs.iter()
            .map(|d| {
                let mut s = 0.0;
                for q in query {
                    let f = count(d, q) as f64;
                    if f == 0.0 {
                        continue;
                    }
                    let dfq = df(docs, q) as f64;
                    let idf = (1.0 + (n - dfq + 0.5) / (dfq + 0.5)).ln();
                    s += idf * f * (k1 + 1.0) / (f + k1 * (1.0 - b + b * d.len() as f64 / avg));
                }
                s
            })
            .collect()
    }

    /// rVSM over dense vectors spanning the whole corpus vocabulary.
    pub fn rvsm(docs: &[Vec<String>], query: &[String]) -> Vec<f64> {
        let n = docs.len() as f64;
        let vocab: BTreeSet<&String> = docs.iter().flatten().collect();
        let weight = |f: usize, term: &str| {
            if f == 0 {
                0.0
            } else {
                (1.0 + (f as f64).ln()) * (n / df(docs, term) as f64).ln()
            }
        };
        let qv: Vec<f64> = vocab.iter().map(|t| weight(count(query, t), t)).collect();
        let lens: Vec<f64> = docs.iter().map(|d| d.len() as f64).collect();
        let (min, max) = lens
            .iter()
            .fold((f64::MAX, f64::MIN), |(lo, hi), &l| (lo.min(l), hi.max(l)));
        docs.iter()
            .zip(&lens)
            .map(|(d, &len)| {
                let dv: Vec<f64> = vocab.iter().map(|t| weight(count(d, t), t)).collect();
                let dot: f64 = dv.iter().zip(&qv).map(|(a, b)| a * b).sum();
                let nd = dv.iter().map(|x| x * x).sum::<f64>().sqrt();
                let nq = qv.iter().map(|x| x * x).sum::<f64>().sqrt();
                if nd == 0.0 || nq == 0.0 || dot <= 0.0 {
                    return 0.0;
                }
                let norm_len = if max > min { (len - min) / (max - min) } else { 0.0 };
                dot / (nd * nq) / (1.0 + (-norm_len).exp())
            })
            .collect()
    }
}

/// Words that survive preprocessing unchanged.
pub const VOCAB: &[&str] = &[
    "alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf", "hotel", "india", "juliet", "kilo", "lima",
];

fn word() -> impl Strategy<Value = String> {
    proptest::sample::select(VOCAB).prop_map(str::to_owned)
}

/// Up to 10 documents of up to 12 tokens, plus a query of 1 to 6 tokens.
pub fn corpus_instance() -> impl Strategy<Value = (Vec<Vec<String>>, Vec<String>)> {
    (
        proptest::collection::vec(proptest::collection::vec(word(), 0..12), 1..=10),
        proptest::collection::vec(word(), 1..6),
    )
}

/// A ranking of at most 20 distinct paths and a nonempty truth set drawn
/// from a slightly larger pool, so misses occur.
pub fn ranking_instance() -> impl Strategy<Value = (Vec<String>, BTreeSet<String>)> {
    let pool: Vec<String> = (0..24).map(|i| format!("src/F{i:02}.java")).collect();
    (
        proptest::sample::subsequence(pool.clone(), 0..=20).prop_shuffle(),
        proptest::sample::subsequence(pool, 1..5),
    )
        .prop_map(|(r, t)| (r, t.into_iter().collect()))
}

pub fn index_of(docs: &[Vec<String>]) -> CorpusIndex {
    let pre = Preprocessor::default();
    let documents = docs
        .iter()
        .enumerate()
        .map(|(i, d)| {
            guiloc_core::SourceDocument::from_text(
                i as u32,
                &format!("d{i:02}.java"),
                &d.join(" "),
                &pre,
                &BTreeSet::new(),
            )
            .unwrap()
        })
        .collect();
    CorpusIndex::build(documents, ScoringParams::default(), pre.options().clone()).unwrap()
}

/// Scores for every document, in document order, zero when unranked.
pub fn dense_scores(index: &CorpusIndex, list: &guiloc_core::RankedList) -> Vec<f64> {
    index
        .paths()
        .map(|p| list.entries.iter().find(|e| e.path == p).map_or(0.0, |e| e.score))
        .collect()
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/jotter")
}

/// The bundled app, its evaluable reports and an index seeded with the
/// traces' resource ids.
pub fn fixture() -> (Dataset, CorpusIndex) {
    let dir = fixture_dir();
    let dataset = Dataset::load(&dir).unwrap();
    let pre = Preprocessor::default();
    let options = ScanOptions {
        known_ids: dataset.resource_ids(),
        ..ScanOptions::default()
    };
    let scan = scan_corpus(&dir.join("app"), &pre, &options).unwrap();
    let index = CorpusIndex::build(scan.documents, ScoringParams::default(), pre.options().clone()).unwrap();
    (dataset, index)
}
