// SPDX-License-Identifier: Apache-2.0
//! Bug-report analysis: sentence segmentation and tagging, step parsing,
//! step-to-model mapping and missing-step detection.

mod classify;
mod model_match;
#[cfg(feature = "remote")]
mod remote;
mod s2r;

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gui::ExecutionModel;
use crate::text::Preprocessor;

pub use classify::{
    classify_sentences, segment_sentences, ClassifierError, ClassifyOutcome, HeuristicClassifier, Sentence,
    SentenceClassifier, Tag, TaggedSentence,
};
pub use model_match::{
    detect_missing_steps, jaccard, map_steps_to_model, suggest_next_steps, MatchParams, MatchStatus, MissingStepReport,
    StepGap, StepMatch, Suggestion,
};
#[cfg(feature = "remote")]
pub use remote::{RemoteClassifier, CLASSIFY_SCHEMA};
pub use s2r::{parse_s2r, S2RStep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BugReport {
    pub report_id: String,
    #[serde(default)]
    pub title: String,
    #[serde(default)]
    pub body: String,
    /// Filled by [`BugReport::tag`]; absent from report files.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sentences: Vec<TaggedSentence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground_truth: Option<BTreeSet<String>>,
}

impl BugReport {
    pub fn from_json(raw: &str) -> Result<Self> {
        serde_json::from_str(raw).map_err(|e| Error::json("report", &e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&raw).map_err(|e| match e {
            Error::Parse {
                line, column, message, ..
            } => Error::Parse {
                what: path.display().to_string(),
                line,
                column,
                message,
            },
            other => other,
        })
    }

    /// Query text: title followed by body.
    pub fn query_text(&self) -> String {
        format!("{}\n{}", self.title, self.body)
    }

    pub fn has_ground_truth(&self) -> bool {
        self.ground_truth.as_ref().is_some_and(|g| !g.is_empty())
    }

    /// Segments and tags the body, storing the result in `sentences`.
    pub fn tag(&mut self, classifier: &dyn SentenceClassifier) -> Vec<String> {
        let outcome = classify_sentences(&segment_sentences(&self.body), classifier);
        self.sentences = outcome.sentences;
        outcome.warnings
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParsedStep {
    pub sentence: usize,
    pub text: String,
    pub step: Option<S2RStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Everything `lint-report` reports for one bug report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportAnalysis {
    pub report_id: String,
    pub classifier: String,
    pub warnings: Vec<String>,
    pub sentences: Vec<TaggedSentence>,
    pub steps: Vec<ParsedStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<Vec<StepMatch>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<MissingStepReport>,
    /// Interactions available after the last matched step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub next_steps: Option<Vec<Suggestion>>,
}

pub fn analyze_report(
    report: &BugReport,
    classifier: &dyn SentenceClassifier,
    model: Option<&ExecutionModel>,
    pre: &Preprocessor,
    params: &MatchParams,
) -> ReportAnalysis {
    let sentences = segment_sentences(&report.body);
    let outcome = classify_sentences(&sentences, classifier);
    let mut steps = Vec::new();
    for (i, s) in outcome.sentences.iter().enumerate() {
        if s.tag != Tag::S2R {
            continue;
        }
        let (step, error) = match parse_s2r(&s.text) {
            Ok(step) => (Some(step), None),
            Err(e) => (None, Some(e.to_string())),
        };
        steps.push(ParsedStep {
            sentence: i,
            text: s.text.clone(),
            step,
            error,
        });
    }
    let mut analysis = ReportAnalysis {
        report_id: report.report_id.clone(),
        classifier: outcome.classifier,
        warnings: outcome.warnings,
        sentences: outcome.sentences,
        steps,
        matches: None,
        missing: None,
        next_steps: None,
    };
    if let Some(model) = model {
        let parsed: Vec<S2RStep> = analysis.steps.iter().filter_map(|p| p.step.clone()).collect();
        let matches = map_steps_to_model(&parsed, model, pre, params);
        let missing = detect_missing_steps(&matches, model);
        let next = matches
            .iter()
            .rev()
            .find(|m| m.status == MatchStatus::Matched)
            .and_then(|m| m.matched_edge.as_ref())
            .map(|e| suggest_next_steps(model, &e.dst).unwrap_or_default());
        analysis.matches = Some(matches);
        analysis.missing = Some(missing);
        analysis.next_steps = next;
    }
    analysis
}
