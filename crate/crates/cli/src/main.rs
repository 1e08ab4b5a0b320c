// SPDX-License-Identifier: Apache-2.0
//! `guiloc` command-line front end.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 configuration or
//! usage error. Progress goes to standard error; machine output goes to the
//! `--out` file (written atomically) or standard output.

mod args;
mod output;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use guiloc_core::eval::{evaluate_config, sweep, Dataset, SweepGrid, SweepOptions};
use guiloc_core::report::{analyze_report, HeuristicClassifier, MatchParams, SentenceClassifier};
use guiloc_core::text::load_stopwords;
use guiloc_core::{
    localize, scan_corpus, BugReport, CorpusIndex, Error, ExecutionModel, PipelineConfig, PreprocessOptions,
    ReproTrace, ScanOptions, ScoringParams,
};

use args::{Cli, Command, ConfigArgs, IndexArgs, LintArgs, SweepArgs};
use output::{emit, write_atomic};

type Result<T> = std::result::Result<T, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    let level = if cli.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 2 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Index(a) => cmd_index(a),
        Command::Localize(a) => {
            let config = a.config.resolve()?;
            let index = CorpusIndex::load(&a.index)?;
            let report = BugReport::load(&a.report)?;
            let trace = load_trace(&a.trace)?;
            let out = localize(&report, &trace, &index, &config)?;
            for f in &out.ranking.fallbacks {
                log::warn!("fallback: {f}");
            }
            if let Some(path) = &a.dump_context {
                write_atomic(path, &json(&out.context))?;
            }
            emit(a.out.as_deref(), &out.to_json())
        }
        Command::BuildModel(a) => {
            let traces = load_traces(&a.traces)?;
            let model = ExecutionModel::build(traces.iter())?;
            log::info!(
                "model: {} screen(s), {} transition(s) from {} trace(s)",
                model.nodes.len(),
                model.edges.len(),
                traces.len()
            );
            write_atomic(&a.out, &model.to_json())
        }
        Command::LintReport(a) => cmd_lint(a),
        Command::Evaluate(a) => {
            let config = a.config.resolve()?;
            let index = CorpusIndex::load(&a.index)?;
            let dataset = Dataset::load(&a.dataset)?;
            let result = evaluate_config(&dataset.cases, &index, &config)?;
            log::info!(
                "hits@1 {:.3}  hits@5 {:.3}  hits@10 {:.3}  mrr {:.3}  map {:.3}",
                result.hits_at[&1],
                result.hits_at[&5],
                result.hits_at[&10],
                result.mrr,
                result.map_score
            );
            emit(a.out.as_deref(), &json(&result))
        }
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn load_trace(path: &Path) -> Result<ReproTrace> {
    let trace = ReproTrace::load(path)?;
    trace.validate()?;
    Ok(trace)
}

/// Trace files named directly, plus every `*.json` file in named
/// directories, sorted by path.
fn trace_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = BTreeSet::new();
    for p in paths {
        if p.is_dir() {
            for entry in std::fs::read_dir(p).map_err(|e| Error::io(p, e))? {
                let path = entry.map_err(|e| Error::io(p, e))?.path();
                if path.extension().is_some_and(|x| x == "json") {
                    files.insert(path);
                }
            }
        } else {
            files.insert(p.clone());
        }
    }
    Ok(files.into_iter().collect())
}

fn load_traces(paths: &[PathBuf]) -> Result<Vec<ReproTrace>> {
    trace_files(paths)?.iter().map(|p| load_trace(p)).collect()
}

fn cmd_index(a: IndexArgs) -> Result<()> {
    let mut preprocess = PreprocessOptions {
        stemming: a.stem,
        ..PreprocessOptions::default()
    };
    if let Some(n) = a.min_term_len {
        preprocess.min_term_len = n;
    }
    if let Some(path) = &a.stopwords {
        preprocess.stopwords = load_stopwords(path)?;
    }
    let known_ids = load_traces(&a.traces)?
        .iter()
        .flat_map(|t| t.screens.iter().flat_map(|s| s.components.iter()))
        .map(|c| c.local_id().to_ascii_lowercase())
        .filter(|id| !id.is_empty())
        .collect();
    let mut options = ScanOptions {
        known_ids,
        ..ScanOptions::default()
    };
    if !a.ext.is_empty() {
        options.extensions = a.ext.iter().map(|e| e.trim_start_matches('.').to_owned()).collect();
    }
    let pre = guiloc_core::Preprocessor::new(preprocess);
    let scan = scan_corpus(&a.corpus, &pre, &options)?;
    for w in &scan.warnings {
        log::warn!("{w}");
    }
    let params = ScoringParams {
        bm25_k1: a.k1,
        bm25_b: a.b,
    };
    let index = CorpusIndex::build(scan.documents, params, pre.options().clone())?;
    log::info!(
        "indexed {} file(s), {} distinct term(s)",
        index.doc_count,
        index.doc_freq.len()
    );
    write_atomic(&a.out, &index.to_json())
}

fn cmd_lint(a: LintArgs) -> Result<()> {
    let report = BugReport::load(&a.report)?;
    let model = a.model.as_deref().map(ExecutionModel::load).transpose()?;
    let remote = if a.heuristic {
        None
    } else {
        guiloc_core::report::RemoteClassifier::from_env()
    };
    let classifier: &dyn SentenceClassifier = match &remote {
        Some(r) => r,
        None => &HeuristicClassifier,
    };
    let params = MatchParams {
        threshold: a.match_threshold,
        ambiguity_band: a.ambiguity_band,
    };
    if !(params.threshold > 0.0 && params.threshold <= 1.0) || params.ambiguity_band < 0.0 {
        return Err(Error::Config(
            "match threshold must be in (0, 1] and the ambiguity band non-negative".into(),
        ));
    }
    let pre = guiloc_core::Preprocessor::default();
    let analysis = analyze_report(&report, classifier, model.as_ref(), &pre, &params);
    for w in &analysis.warnings {
        log::warn!("{w}");
    }
    emit(a.out.as_deref(), &json(&analysis))
}

fn cmd_sweep(a: SweepArgs) -> Result<()> {
    let base = a.config.resolve()?;
    let grid = a.grid(&base)?;
    let index = CorpusIndex::load(&a.index)?;
    let dataset = Dataset::load(&a.dataset)?;
    let existing_csv = if a.fresh || !a.out.exists() {
        None
    } else {
        Some(std::fs::read_to_string(&a.out).map_err(|e| Error::io(&a.out, e))?)
    };
    log::info!("sweeping {} configuration(s)", grid.size());
    let outcome = sweep(
        &grid,
        &base,
        &dataset.cases,
        &index,
        &SweepOptions {
            jobs: a.jobs,
            existing_csv,
        },
    )?;
    log::info!(
        "{} row(s): {} evaluated, {} kept from the existing file, {} skipped",
        outcome.row_count(),
        outcome.results.len(),
        outcome.reused,
        outcome.skipped.len()
    );
    if let Some(path) = &a.detail {
        write_atomic(path, &json(&outcome.results))?;
    }
    write_atomic(&a.out, &outcome.csv)
}

impl ConfigArgs {
    /// Defaults, then the `--config` file, then individual flags.
    fn resolve(&self) -> Result<PipelineConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                PipelineConfig::from_json(&raw)?
            }
            None => PipelineConfig::default(),
        };
        if let Some(v) = self.scorer {
            cfg.scorer = v;
        }
        if let Some(v) = self.query {
            cfg.query_strategy = v;
        }
        if let Some(v) = self.rerank {
            cfg.rerank_strategy = v;
        }
        if let Some(v) = self.window {
            cfg.window = v;
        }
        if let Some(v) = &self.term_sources {
            cfg.term_sources = v.clone();
        }
        if let Some(v) = self.expansion_weight {
            cfg.expansion_weight = v;
        }
        if let Some(v) = self.top {
            cfg.top_k = v;
        }
        if let Some(v) = self.component_threshold {
            cfg.component_threshold = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

impl SweepArgs {
    /// Grid axes; an axis without a flag takes the base configuration's value.
    fn grid(&self, base: &PipelineConfig) -> Result<SweepGrid> {
        let mut grid = SweepGrid::single(base);
        if !self.scorers.is_empty() {
            grid.scorers = self.scorers.clone();
        }
        if !self.queries.is_empty() {
            grid.query_strategies = self.queries.clone();
        }
        if !self.reranks.is_empty() {
            grid.rerank_strategies = self.reranks.clone();
        }
        if !self.windows.is_empty() {
            grid.windows = self.windows.clone();
        }
        if !self.sweep_term_sources.is_empty() {
            grid.term_sources = self.sweep_term_sources.clone();
        }
        if !self.expansion_weights.is_empty() {
            grid.expansion_weights = self.expansion_weights.clone();
        }
        if let Some(j) = self.jobs {
            if j == 0 {
                return Err(Error::Config("--jobs must be at least 1".into()));
            }
        }
        Ok(grid)
    }
}
