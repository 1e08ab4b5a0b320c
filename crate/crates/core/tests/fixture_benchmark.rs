// SPDX-License-Identifier: Apache-2.0
mod common;

use common::{fixture, oracle};
use guiloc_core::eval::evaluate_config;
use guiloc_core::pipeline::rank_report;
use guiloc_core::{PipelineConfig, QueryStrategy, RerankStrategy, Scorer};

fn config(scorer: Scorer, q: QueryStrategy, r: RerankStrategy, window: usize) -> PipelineConfig {
    PipelineConfig {
        scorer,
        query_strategy: q,
        rerank_strategy: r,
        window,
        ..PipelineConfig::default()
    }
}

#[test]
fn reports_without_truth_are_excluded() {
    let (dataset, _) = fixture();
    assert_eq!(dataset.cases.len(), 10);
    assert_eq!(dataset.excluded, ["R11"]);
}

#[test]
fn gui_augmentation_beats_text_only() {
    let (dataset, index) = fixture();
    let miss = index.documents.len() + 1;
    for scorer in Scorer::ALL {
        let base = evaluate_config(
            &dataset.cases,
            &index,
            &config(scorer, QueryStrategy::Base, RerankStrategy::None, 3),
        )
        .unwrap();
        let gui = evaluate_config(
            &dataset.cases,
            &index,
            &config(scorer, QueryStrategy::Expand, RerankStrategy::FilterBoost, 3),
        )
        .unwrap();
        assert!(gui.hits_at[&10] >= base.hits_at[&10], "{scorer}");
        assert!(gui.mean_first_rank(miss) < base.mean_first_rank(miss), "{scorer}");
    }
}

#[test]
fn wider_window_helps() {
    let (dataset, index) = fixture();
    for scorer in Scorer::ALL {
        let w1 = evaluate_config(
            &dataset.cases,
            &index,
            &config(scorer, QueryStrategy::Expand, RerankStrategy::FilterBoost, 1),
        )
        .unwrap();
        let w3 = evaluate_config(
            &dataset.cases,
            &index,
            &config(scorer, QueryStrategy::Expand, RerankStrategy::FilterBoost, 3),
        )
        .unwrap();
        assert!(w3.mrr >= w1.mrr, "{scorer}: {} < {}", w3.mrr, w1.mrr);
    }
}

#[test]
fn aggregate_metrics_equal_recomputation() {
    let (dataset, index) = fixture();
    for scorer in Scorer::ALL {
        for q in QueryStrategy::ALL {
            for r in RerankStrategy::ALL {
                let cfg = config(scorer, q, r, 3);
                let result = evaluate_config(&dataset.cases, &index, &cfg).unwrap();
                let (mut h, mut rr, mut ap) = ([0.0; 3], 0.0, 0.0);
                for case in &dataset.cases {
                    let ranking: Vec<String> = rank_report(&case.report, &case.trace, &index, &cfg)
                        .unwrap()
                        .ranking
                        .entries
                        .into_iter()
                        .map(|e| e.path)
                        .collect();
                    let truth = case.report.ground_truth.as_ref().unwrap();
                    for (slot, k) in h.iter_mut().zip([1, 5, 10]) {
                        *slot += oracle::hits_at_k(&ranking, truth, k) as f64;
                    }
                    rr += oracle::reciprocal_rank(&ranking, truth);
                    ap += oracle::average_precision(&ranking, truth);
                }
                let n = dataset.cases.len() as f64;
                assert_eq!(result.hits_at[&1], h[0] / n);
                assert_eq!(result.hits_at[&5], h[1] / n);
                assert_eq!(result.hits_at[&10], h[2] / n);
                assert_eq!(result.mrr, rr / n);
                assert_eq!(result.map_score, ap / n);
                assert!(result.hits_at[&1] <= result.hits_at[&5] && result.hits_at[&5] <= result.hits_at[&10]);
            }
        }
    }
}

#[test]
fn localize_output_is_deterministic() {
    let (dataset, index) = fixture();
    let cfg = config(Scorer::Bm25, QueryStrategy::Expand, RerankStrategy::FilterBoost, 3);
    let case = &dataset.cases[0];
    let a = guiloc_core::localize(&case.report, &case.trace, &index, &cfg)
        .unwrap()
        .to_json();
    let b = guiloc_core::localize(&case.report, &case.trace, &index, &cfg)
        .unwrap()
        .to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["report_id"], "R01");
    assert_eq!(v["ranking"][0]["rank"], 1);
    assert!(v["ranking"].as_array().unwrap().len() <= 10);
}
