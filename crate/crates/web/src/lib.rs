// SPDX-License-Identifier: Apache-2.0
//! Browser bindings over the bundled sample app.
//!
//! Every export takes and returns JSON strings. The `*_json` functions hold
//! the logic and run natively in tests; the exported wrappers only convert
//! errors to `JsValue`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use guiloc_core::pipeline::rank_report;
use guiloc_core::report::{analyze_report, HeuristicClassifier, MatchParams};
use guiloc_core::{
    BugReport, CorpusIndex, ExecutionModel, PipelineConfig, Preprocessor, ReproTrace, ScoringParams, SourceDocument,
};
use serde::{Deserialize, Serialize};
use serde_json::json;
use wasm_bindgen::prelude::*;

mod fixture {
    include!(concat!(env!("OUT_DIR"), "/fixture.rs"));
}

struct Demo {
    index: CorpusIndex,
    reports: Vec<BugReport>,
    traces: BTreeMap<String, ReproTrace>,
    model: ExecutionModel,
}

fn load() -> Result<Demo, String> {
    let err = |e: guiloc_core::Error| e.to_string();
    let reports = fixture::REPORTS
        .iter()
        .map(|(_, raw)| BugReport::from_json(raw))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let traces = fixture::TRACES
        .iter()
        .map(|(_, raw)| ReproTrace::from_json(raw).map(|t| (t.trace_id.clone(), t)))
        .collect::<Result<BTreeMap<_, _>, _>>()
        .map_err(err)?;
    let known_ids: BTreeSet<String> = traces
        .values()
        .flat_map(|t| t.screens.iter().flat_map(|s| s.components.iter()))
        .map(|c| c.local_id().to_ascii_lowercase())
        .filter(|id| !id.is_empty())
        .collect();
    let pre = Preprocessor::default();
    let documents = fixture::SOURCES
        .iter()
        .enumerate()
        .map(|(i, (path, raw))| SourceDocument::from_text(i as u32, path, raw, &pre, &known_ids))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let index = CorpusIndex::build(documents, ScoringParams::default(), pre.options().clone()).map_err(err)?;
    let model = ExecutionModel::build(traces.values()).map_err(err)?;
    Ok(Demo {
        index,
        reports,
        traces,
        model,
    })
}

fn demo() -> Result<&'static Demo, String> {
    static DEMO: OnceLock<Result<Demo, String>> = OnceLock::new();
    DEMO.get_or_init(load).as_ref().map_err(Clone::clone)
}

/// The sample reports that have a reproduction trace.
pub fn reports_json() -> Result<String, String> {
    let d = demo()?;
    let list: Vec<_> = d
        .reports
        .iter()
        .filter(|r| d.traces.contains_key(&r.report_id))
        .map(|r| json!({ "report_id": r.report_id, "title": r.title, "body": r.body, "ground_truth": r.ground_truth }))
        .collect();
    Ok(serde_json::to_string(&list).expect("serializes"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LocalizeRequest {
    report_id: String,
    /// Replaces the stored report text when present.
    #[serde(default)]
    body: Option<String>,
    #[serde(default)]
    config: serde_json::Value,
}

#[derive(Serialize)]
struct LocalizeResponse {
    localization: serde_json::Value,
    gui_terms: Vec<String>,
    /// Rank of each buggy file in the full ranking; `null` when not retrieved.
    truth_ranks: BTreeMap<String, Option<usize>>,
}

pub fn localize_json(request: &str) -> Result<String, String> {
    let req: LocalizeRequest = serde_json::from_str(request).map_err(|e| format!("bad request: {e}"))?;
    let d = demo()?;
    let stored = d
        .reports
        .iter()
        .find(|r| r.report_id == req.report_id)
        .ok_or_else(|| format!("unknown report {}", req.report_id))?;
    let trace = d
        .traces
        .get(&req.report_id)
        .ok_or_else(|| format!("no trace for {}", req.report_id))?;
    let config = match &req.config {
        serde_json::Value::Null => PipelineConfig::default(),
        v => PipelineConfig::from_json(&v.to_string()).map_err(|e| e.to_string())?,
    };
    let mut report = stored.clone();
    if let Some(body) = req.body {
        report.body = body;
    }
    let mut loc = rank_report(&report, trace, &d.index, &config).map_err(|e| e.to_string())?;
    let truth_ranks = stored
        .ground_truth
        .iter()
        .flatten()
        .map(|p| (p.clone(), loc.ranking.rank_of(p)))
        .collect();
    loc.ranking.truncate(config.top_k);
    let response = LocalizeResponse {
        localization: serde_json::from_str(&loc.to_json()).expect("valid json"),
        gui_terms: loc.context.terms.clone(),
        truth_ranks,
    };
    Ok(serde_json::to_string(&response).expect("serializes"))
}

/// Tags and parses free report text; with `use_model`, maps the steps onto
/// the sample app's execution model.
pub fn analyze_json(body: &str, use_model: bool) -> Result<String, String> {
    let d = demo()?;
    let report = BugReport {
        report_id: "draft".into(),
        title: String::new(),
        body: body.into(),
        sentences: Vec::new(),
        ground_truth: None,
    };
    let model = use_model.then_some(&d.model);
    let analysis = analyze_report(
        &report,
        &HeuristicClassifier,
        model,
        &Preprocessor::default(),
        &MatchParams::default(),
    );
    Ok(serde_json::to_string(&analysis).expect("serializes"))
}

/// Screens and transitions of the model built from all sample traces.
pub fn model_json() -> Result<String, String> {
    let d = demo()?;
    let nodes: Vec<_> = d
        .model
        .nodes
        .iter()
        .map(|(fp, s)| {
            json!({
                "fingerprint": fp,
                "activity": s.activity_name,
                "window": s.window_name,
                "entry": d.model.entry_fingerprints.contains(fp),
            })
        })
        .collect();
    let edges: Vec<_> = d
        .model
        .edges
        .iter()
        .map(|e| {
            let label = d.model.edge_component(e).map(|c| c.text.clone()).unwrap_or_default();
            json!({ "src": e.src, "dst": e.dst, "action": e.action, "resource_id": e.resource_id, "label": label })
        })
        .collect();
    Ok(serde_json::to_string(&json!({ "nodes": nodes, "edges": edges })).expect("serializes"))
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn reports() -> Result<String, JsValue> {
    js(reports_json())
}

#[wasm_bindgen]
pub fn localize(request: &str) -> Result<String, JsValue> {
    js(localize_json(request))
}

#[wasm_bindgen]
pub fn analyze(body: &str, use_model: bool) -> Result<String, JsValue> {
    js(analyze_json(body, use_model))
}

#[wasm_bindgen]
pub fn model() -> Result<String, JsValue> {
    js(model_json())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn lists_traced_reports() {
        let v = parse(&reports_json().unwrap());
        assert_eq!(v.as_array().unwrap().len(), 10);
        assert_eq!(v[0]["report_id"], "R01");
    }

    #[test]
    fn localize_matches_native_index() {
        let req =
            json!({ "report_id": "R01", "config": { "query_strategy": "expand", "rerank_strategy": "filter_boost" } });
        let v = parse(&localize_json(&req.to_string()).unwrap());
        assert_eq!(
            v["localization"]["ranking"][0]["path"],
            "com/example/jotter/TrashActivity.java"
        );
        assert_eq!(v["truth_ranks"]["com/example/jotter/TrashActivity.java"], 1);
        assert!(!v["gui_terms"].as_array().unwrap().is_empty());
    }

    #[test]
    fn localize_rejects_bad_input() {
        assert!(localize_json(r#"{"report_id": "R99"}"#).is_err());
        assert!(localize_json(r#"{"report_id": "R01", "config": {"window": 0}}"#).is_err());
        assert!(localize_json(r#"{"report_id": "R01", "config": {"windw": 2}}"#).is_err());
        assert!(localize_json("not json").is_err());
    }

    #[test]
    fn body_override_changes_ranking() {
        let a = parse(&localize_json(r#"{"report_id": "R01"}"#).unwrap());
        let b = parse(&localize_json(r#"{"report_id": "R01", "body": "reminder alarm time picker"}"#).unwrap());
        assert_ne!(a["localization"]["ranking"], b["localization"]["ranking"]);
    }

    #[test]
    fn analyze_tags_and_maps_steps() {
        let v = parse(&analyze_json("1. Open the overflow menu\n2. Tap Trash\nThe app crashes.", true).unwrap());
        let tags: Vec<&str> = v["sentences"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["tag"].as_str().unwrap())
            .collect();
        assert_eq!(tags, ["S2R", "S2R", "OB"]);
        assert_eq!(v["steps"].as_array().unwrap().len(), 2);
        assert!(v["matches"].is_array());
        let plain = parse(&analyze_json("Tap Trash", false).unwrap());
        assert!(plain.get("matches").is_none());
    }

    #[test]
    fn model_edges_reference_nodes() {
        let v = parse(&model_json().unwrap());
        let nodes: BTreeSet<&str> = v["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|n| n["fingerprint"].as_str().unwrap())
            .collect();
        let edges = v["edges"].as_array().unwrap();
        assert!(!edges.is_empty());
        for e in edges {
            assert!(nodes.contains(e["src"].as_str().unwrap()) && nodes.contains(e["dst"].as_str().unwrap()));
        }
    }
}
