// SPDX-License-Identifier: Apache-2.0
use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use guiloc_core::mapping::{parse_term_sources, TermSource};
use guiloc_core::{QueryStrategy, RerankStrategy, Scorer};

fn term_sources(s: &str) -> Result<BTreeSet<TermSource>, String> {
    parse_term_sources(s).map_err(|e| e.to_string())
}

fn scorer(s: &str) -> Result<Scorer, String> {
    s.parse().map_err(|e: guiloc_core::Error| e.to_string())
}

fn query(s: &str) -> Result<QueryStrategy, String> {
    s.parse().map_err(|e: guiloc_core::Error| e.to_string())
}

fn rerank(s: &str) -> Result<RerankStrategy, String> {
    s.parse().map_err(|e: guiloc_core::Error| e.to_string())
}

/// GUI-augmented bug localization for Android apps.
#[derive(Debug, Parser)]
#[command(name = "guiloc", version)]
pub struct Cli {
    /// Only log warnings and errors.
    #[arg(short, long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan a source tree and write a retrieval index.
    Index(IndexArgs),
    /// Rank source files for one bug report and its reproduction trace.
    Localize(LocalizeArgs),
    /// Merge reproduction traces into an execution model.
    BuildModel(BuildModelArgs),
    /// Tag report sentences, parse steps and check them against a model.
    LintReport(LintArgs),
    /// Score one configuration over a dataset of reports and traces.
    Evaluate(EvaluateArgs),
    /// Evaluate a grid of configurations into a CSV table.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    /// Root of the source tree.
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Trace files or directories; their resource ids are matched in code.
    #[arg(long, num_args = 1..)]
    pub traces: Vec<PathBuf>,
    /// File extensions to index (default: java).
    #[arg(long, value_delimiter = ',')]
    pub ext: Vec<String>,
    /// Apply Porter stemming.
    #[arg(long)]
    pub stem: bool,
    #[arg(long)]
    pub min_term_len: Option<usize>,
    /// Stopword file (one word per line) replacing the built-in lists.
    #[arg(long)]
    pub stopwords: Option<PathBuf>,
    #[arg(long, default_value_t = 1.2)]
    pub k1: f64,
    #[arg(long, default_value_t = 0.75)]
    pub b: f64,
}

/// Pipeline settings. Flags override values from `--config`.
#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// JSON file with pipeline settings.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// bm25 or rvsm.
    #[arg(long, value_parser = scorer)]
    pub scorer: Option<Scorer>,
    /// base, expand or replace.
    #[arg(long, value_parser = query)]
    pub query: Option<QueryStrategy>,
    /// none, filter, boost or filter-boost.
    #[arg(long, value_parser = rerank)]
    pub rerank: Option<RerankStrategy>,
    /// Number of trailing screens used as GUI evidence.
    #[arg(long)]
    pub window: Option<usize>,
    /// `all` or sources joined by `+` (activity, window-name, component-id,
    /// component-text, content-desc, type).
    #[arg(long, value_parser = term_sources)]
    pub term_sources: Option<BTreeSet<TermSource>>,
    #[arg(long)]
    pub expansion_weight: Option<f64>,
    /// Number of files to report.
    #[arg(long)]
    pub top: Option<usize>,
    #[arg(long)]
    pub component_threshold: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LocalizeArgs {
    #[arg(long)]
    pub index: PathBuf,
    #[arg(long)]
    pub report: PathBuf,
    #[arg(long)]
    pub trace: PathBuf,
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Write the ranking here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the GUI context (terms and matched files) as JSON.
    #[arg(long)]
    pub dump_context: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildModelArgs {
    /// Trace files or directories of trace files.
    #[arg(long, num_args = 1.., required = true)]
    pub traces: Vec<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct LintArgs {
    #[arg(long)]
    pub report: PathBuf,
    /// Execution model for step matching and missing-step detection.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Ignore GUILOC_CLASSIFIER_URL and use the built-in rules.
    #[arg(long)]
    pub heuristic: bool,
    #[arg(long, default_value_t = 0.5)]
    pub match_threshold: f64,
    #[arg(long, default_value_t = 0.05)]
    pub ambiguity_band: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[arg(long)]
    pub index: PathBuf,
    /// Directory with `reports/` and `traces/`.
    #[arg(long)]
    pub dataset: PathBuf,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub index: PathBuf,
    #[arg(long)]
    pub dataset: PathBuf,
    /// CSV output. Rows already in this file are kept and not recomputed.
    #[arg(long)]
    pub out: PathBuf,
    /// Recompute every row even if `--out` exists.
    #[arg(long)]
    pub fresh: bool,
    /// Per-report metrics of the evaluated rows, as JSON.
    #[arg(long)]
    pub detail: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_delimiter = ',', value_parser = scorer)]
    pub scorers: Vec<Scorer>,
    #[arg(long, value_delimiter = ',', value_parser = query)]
    pub queries: Vec<QueryStrategy>,
    #[arg(long, value_delimiter = ',', value_parser = rerank)]
    pub reranks: Vec<RerankStrategy>,
    #[arg(long, value_delimiter = ',')]
    pub windows: Vec<usize>,
    /// Repeat for each term-source set to try.
    #[arg(long = "sweep-term-sources", value_parser = term_sources)]
    pub sweep_term_sources: Vec<BTreeSet<TermSource>>,
    #[arg(long, value_delimiter = ',')]
    pub expansion_weights: Vec<f64>,
    /// Base settings for axes not swept.
    #[command(flatten)]
    pub config: ConfigArgs,
}
