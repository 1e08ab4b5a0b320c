// SPDX-License-Identifier: Apache-2.0
use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the localization engine and its analysis toolkit.
///
/// Variants fall into two families that the CLI maps to distinct exit codes:
/// input/validation problems (bad files, broken invariants) and configuration
/// problems (unknown strategy names, out-of-range knobs).
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{what}: malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        what: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid trace {trace_id:?}: screen {screen}: {reason}")]
    TraceValidation {
        trace_id: String,
        screen: usize,
        reason: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("cannot parse step {sentence:?}: no action verb found")]
    UnparseableStep { sentence: String },

    #[error("unknown screen fingerprint {0}")]
    UnknownFingerprint(String),

    #[error("unsupported {what} format version {found} (expected {expected})")]
    Version {
        what: &'static str,
        found: u32,
        expected: u32,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn json(what: impl Into<String>, err: &serde_json::Error) -> Self {
        Error::Parse {
            what: what.into(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }

    /// True for configuration problems (CLI exit code 2); everything else is
    /// an input or validation failure (exit code 1).
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
