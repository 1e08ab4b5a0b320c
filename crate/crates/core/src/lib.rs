// SPDX-License-Identifier: Apache-2.0
//! GUI-augmented bug localization for Android apps.
//!
//! Source files are ranked against a bug report with a lexical scorer (BM25 or
//! rVSM). GUI information from a reproduction trace (activity names, resource
//! ids and labels of the components the reporter exercised) is used to
//! reformulate the query and to filter or boost the ranking. The crate also
//! tags and parses bug-report sentences, maps steps to reproduce onto an app
//! execution model, and evaluates configurations with Hits@K, MRR and MAP.

pub mod corpus;
pub mod error;
pub mod eval;
pub mod gui;
pub mod index;
pub mod mapping;
pub mod pipeline;
pub mod ranking;
pub mod report;
pub mod text;

pub use corpus::{scan_corpus, ScanOptions, SourceDocument};
pub use error::{Error, Result};
pub use gui::{Action, ExecutionModel, ReproTrace, Screen};
pub use index::{CorpusIndex, Scorer, ScoringParams};
pub use mapping::{GuiContext, TermSource};
pub use pipeline::{localize, PipelineConfig, QueryStrategy, RerankStrategy};
pub use ranking::{Fallback, GuiFlag, RankedEntry, RankedList};
pub use report::BugReport;
pub use text::{PreprocessOptions, Preprocessor};
