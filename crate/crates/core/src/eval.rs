// SPDX-License-Identifier: Apache-2.0
//! Retrieval metrics, per-configuration evaluation and grid sweeps.
//!
//! Miss convention: a truth file that is not ranked has rank infinity and
//! contributes nothing to any metric.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gui::ReproTrace;
use crate::index::{CorpusIndex, Scorer};
use crate::mapping::{format_term_sources, TermSource};
use crate::pipeline::{rank_report, PipelineConfig, QueryStrategy, RerankStrategy};
use crate::report::BugReport;

/// Cut-offs reported by [`evaluate_config`].
pub const HITS_K: [usize; 3] = [1, 5, 10];

pub const CSV_HEADER: [&str; 12] = [
    "scorer",
    "query_strategy",
    "rerank_strategy",
    "window",
    "term_sources",
    "expansion_weight",
    "hits1",
    "hits5",
    "hits10",
    "mrr",
    "map",
    "reports",
];

fn check_truth(truth: &BTreeSet<String>) -> Result<()> {
    if truth.is_empty() {
        return Err(Error::Input("ground truth is empty".into()));
    }
    Ok(())
}

/// 1-based rank of the first truth path.
pub fn first_relevant_rank(ranking: &[&str], truth: &BTreeSet<String>) -> Option<usize> {
    ranking.iter().position(|p| truth.contains(*p)).map(|i| i + 1)
}

pub fn hits_at_k(ranking: &[&str], truth: &BTreeSet<String>, k: usize) -> Result<u8> {
    check_truth(truth)?;
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    Ok(first_relevant_rank(ranking, truth).is_some_and(|r| r <= k) as u8)
}

pub fn reciprocal_rank(ranking: &[&str], truth: &BTreeSet<String>) -> Result<f64> {
    check_truth(truth)?;
    Ok(first_relevant_rank(ranking, truth).map_or(0.0, |r| 1.0 / r as f64))
}

pub fn average_precision(ranking: &[&str], truth: &BTreeSet<String>) -> Result<f64> {
    check_truth(truth)?;
    let mut hits = 0usize;
    let mut sum = 0.0;
    let mut seen = BTreeSet::new();
    for (i, p) in ranking.iter().enumerate() {
        if truth.contains(*p) && seen.insert(*p) {
            hits += 1;
            sum += hits as f64 / (i + 1) as f64;
        }
    }
    Ok(sum / truth.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportMetrics {
    pub report_id: String,
    /// `None` on a miss.
    pub first_relevant_rank: Option<usize>,
    pub average_precision: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalResult {
    pub config: PipelineConfig,
    pub per_report: Vec<ReportMetrics>,
    pub hits_at: BTreeMap<usize, f64>,
    pub mrr: f64,
    pub map_score: f64,
    pub report_count: usize,
}

impl EvalResult {
    /// Mean first-relevant rank with misses counted as `miss_rank`.
    pub fn mean_first_rank(&self, miss_rank: usize) -> f64 {
        let total: usize = self
            .per_report
            .iter()
            .map(|r| r.first_relevant_rank.unwrap_or(miss_rank))
            .sum();
        total as f64 / self.report_count as f64
    }
}

#[derive(Debug, Clone)]
pub struct EvalCase {
    pub report: BugReport,
    pub trace: ReproTrace,
}

#[derive(Debug, Clone, Default)]
pub struct Dataset {
    pub cases: Vec<EvalCase>,
    /// Reports dropped for lacking ground truth.
    pub excluded: Vec<String>,
}

impl Dataset {
    /// Loads `<dir>/reports/*.json`, pairing each report with
    /// `<dir>/traces/<report_id>.json`. Reports without ground truth are
    /// dropped; a report whose trace is missing or invalid is fatal.
    pub fn load(dir: &Path) -> Result<Self> {
        let reports_dir = dir.join("reports");
        let mut files: Vec<_> = std::fs::read_dir(&reports_dir)
            .map_err(|e| Error::io(&reports_dir, e))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        let mut out = Dataset::default();
        for path in files {
            let report = BugReport::load(&path)?;
            if !report.has_ground_truth() {
                out.excluded.push(report.report_id);
                continue;
            }
            let trace_path = dir.join("traces").join(format!("{}.json", report.report_id));
            if !trace_path.is_file() {
                return Err(Error::Input(format!(
                    "report {}: no trace at {}",
                    report.report_id,
                    trace_path.display()
                )));
            }
            let trace = ReproTrace::load(&trace_path)
                .and_then(|t| t.validate().map(|_| t))
                .map_err(|e| Error::Input(format!("report {}: {e}", report.report_id)))?;
            out.cases.push(EvalCase { report, trace });
        }
        if !out.excluded.is_empty() {
            log::info!("excluded {} report(s) without ground truth", out.excluded.len());
        }
        log::info!("loaded {} evaluable report(s)", out.cases.len());
        Ok(out)
    }

    /// Lowercased resource ids seen in any trace, for seeding code facets.
    pub fn resource_ids(&self) -> BTreeSet<String> {
        self.cases
            .iter()
            .flat_map(|c| c.trace.screens.iter())
            .flat_map(|s| s.components.iter())
            .map(|c| c.local_id().to_ascii_lowercase())
            .filter(|id| !id.is_empty())
            .collect()
    }
}

pub fn evaluate_config(cases: &[EvalCase], index: &CorpusIndex, config: &PipelineConfig) -> Result<EvalResult> {
    config.validate()?;
    if cases.is_empty() {
        return Err(Error::Input("no reports with ground truth to evaluate".into()));
    }
    let mut per_report = Vec::with_capacity(cases.len());
    let mut hits: BTreeMap<usize, usize> = HITS_K.iter().map(|&k| (k, 0)).collect();
    let (mut rr_sum, mut ap_sum) = (0.0, 0.0);
    for case in cases {
        let id = &case.report.report_id;
        let truth = case
            .report
            .ground_truth
            .as_ref()
            .filter(|t| !t.is_empty())
            .ok_or_else(|| Error::Input(format!("report {id}: no ground truth")))?;
        let out = rank_report(&case.report, &case.trace, index, config).map_err(|e| {
            if e.is_config() {
                e
            } else {
                Error::Input(format!("report {id}: {e}"))
            }
        })?;
        let ranking = out.ranking.paths();
        for (k, n) in hits.iter_mut() {
            *n += hits_at_k(&ranking, truth, *k)? as usize;
        }
        rr_sum += reciprocal_rank(&ranking, truth)?;
        let ap = average_precision(&ranking, truth)?;
        ap_sum += ap;
        per_report.push(ReportMetrics {
            report_id: id.clone(),
            first_relevant_rank: first_relevant_rank(&ranking, truth),
            average_precision: ap,
        });
    }
    let n = cases.len() as f64;
    Ok(EvalResult {
        config: config.clone(),
        per_report,
        hits_at: hits.into_iter().map(|(k, h)| (k, h as f64 / n)).collect(),
        mrr: rr_sum / n,
        map_score: ap_sum / n,
        report_count: cases.len(),
    })
}

/// Values to try per configuration field. Fields not listed here (`top_k`,
/// `component_threshold`) come from the base configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub scorers: Vec<Scorer>,
    pub query_strategies: Vec<QueryStrategy>,
    pub rerank_strategies: Vec<RerankStrategy>,
    pub windows: Vec<usize>,
    pub term_sources: Vec<BTreeSet<TermSource>>,
    pub expansion_weights: Vec<f64>,
}

impl SweepGrid {
    /// The single-point grid for `base`.
    pub fn single(base: &PipelineConfig) -> Self {
        Self {
            scorers: vec![base.scorer],
            query_strategies: vec![base.query_strategy],
            rerank_strategies: vec![base.rerank_strategy],
            windows: vec![base.window],
            term_sources: vec![base.term_sources.clone()],
            expansion_weights: vec![base.expansion_weight],
        }
    }

    pub fn size(&self) -> usize {
        self.scorers.len()
            * self.query_strategies.len()
            * self.rerank_strategies.len()
            * self.windows.len()
            * self.term_sources.len()
            * self.expansion_weights.len()
    }

    /// Every combination, in lexicographic order of value indices (the last
    /// field varies fastest).
    pub fn configs(&self, base: &PipelineConfig) -> Vec<PipelineConfig> {
        let mut out = Vec::with_capacity(self.size());
        for &scorer in &self.scorers {
            for &query_strategy in &self.query_strategies {
                for &rerank_strategy in &self.rerank_strategies {
                    for &window in &self.windows {
                        for sources in &self.term_sources {
                            for &expansion_weight in &self.expansion_weights {
                                out.push(PipelineConfig {
                                    scorer,
                                    query_strategy,
                                    rerank_strategy,
                                    window,
                                    term_sources: sources.clone(),
                                    expansion_weight,
                                    ..base.clone()
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The configuration columns of a sweep row; also the resume key.
pub fn row_key(cfg: &PipelineConfig) -> [String; 6] {
    [
        cfg.scorer.as_str().to_owned(),
        cfg.query_strategy.as_str().to_owned(),
        cfg.rerank_strategy.as_str().to_owned(),
        cfg.window.to_string(),
        format_term_sources(&cfg.term_sources),
        cfg.expansion_weight.to_string(),
    ]
}

fn metric_columns(r: &EvalResult) -> [String; 6] {
    let h = |k| r.hits_at.get(&k).copied().unwrap_or(0.0).to_string();
    [
        h(1),
        h(5),
        h(10),
        r.mrr.to_string(),
        r.map_score.to_string(),
        r.report_count.to_string(),
    ]
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// CSV text of an earlier (possibly partial) run; rows already present are
    /// kept verbatim and not recomputed.
    pub existing_csv: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub csv: String,
    /// Freshly computed rows, in grid order.
    pub results: Vec<EvalResult>,
    pub reused: usize,
    pub skipped: Vec<(PipelineConfig, String)>,
}

impl SweepOutcome {
    pub fn row_count(&self) -> usize {
        self.results.len() + self.reused
    }
}

fn read_existing(csv_text: &str) -> Result<BTreeMap<[String; 6], Vec<String>>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(csv_text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header != CSV_HEADER {
        return Err(Error::Input(format!(
            "existing sweep file has header {:?}, expected {:?}",
            header.join(","),
            CSV_HEADER.join(",")
        )));
    }
    let mut rows = BTreeMap::new();
    for rec in reader.records() {
        let rec = rec?;
        let fields: Vec<String> = rec.iter().map(str::to_owned).collect();
        let key: [String; 6] = std::array::from_fn(|i| fields[i].clone());
        rows.insert(key, fields);
    }
    Ok(rows)
}

#[cfg(feature = "parallel")]
fn run_all<T: Send>(jobs: Option<usize>, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Result<Vec<T>> {
    use rayon::prelude::*;
    let work = || (0..n).into_par_iter().map(&f).collect();
    match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all<T: Send>(_jobs: Option<usize>, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Result<Vec<T>> {
    Ok((0..n).map(f).collect())
}

/// Evaluates every grid combination and renders the CSV table. Invalid
/// combinations are logged and left out. Row order follows the grid, not
/// completion order.
pub fn sweep(
    grid: &SweepGrid,
    base: &PipelineConfig,
    cases: &[EvalCase],
    index: &CorpusIndex,
    options: &SweepOptions,
) -> Result<SweepOutcome> {
    if grid.size() == 0 {
        return Err(Error::Config("sweep grid is empty".into()));
    }
    let existing = match &options.existing_csv {
        Some(text) if !text.trim().is_empty() => read_existing(text)?,
        _ => BTreeMap::new(),
    };
    let mut outcome = SweepOutcome::default();
    let mut pending = Vec::new();
    // (key, Some(existing row) | None for pending)
    let mut plan: Vec<([String; 6], Option<Vec<String>>)> = Vec::new();
    for cfg in grid.configs(base) {
        if let Err(e) = cfg.validate() {
            log::warn!("skipping {}: {e}", row_key(&cfg).join(","));
            outcome.skipped.push((cfg, e.to_string()));
            continue;
        }
        let key = row_key(&cfg);
        match existing.get(&key) {
            Some(row) => {
                outcome.reused += 1;
                plan.push((key, Some(row.clone())));
            }
            None => {
                plan.push((key, None));
                pending.push(cfg);
            }
        }
    }
    if outcome.reused > 0 {
        log::info!(
            "resuming: {} row(s) already present, {} to evaluate",
            outcome.reused,
            pending.len()
        );
    }

    let results = run_all(options.jobs, pending.len(), |i| {
        evaluate_config(cases, index, &pending[i])
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER)?;
    let mut fresh = results.iter();
    for (key, row) in plan {
        match row {
            Some(row) => writer.write_record(&row)?,
            None => {
                let r = fresh.next().expect("one result per pending row");
                writer.write_record(key.iter().chain(metric_columns(r).iter()))?;
            }
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Input(format!("csv buffer: {e}")))?;
    outcome.csv = String::from_utf8(bytes).expect("csv output is utf-8");
    outcome.results = results;
    Ok(outcome)
}
