// SPDX-License-Identifier: Apache-2.0
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which GUI mapping strategy linked a file to the reproduction trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GuiFlag {
    /// Class name equals an activity or window basename.
    Activity,
    /// References the resource id of an exercised component.
    Listener,
    /// Contains the terms of an exercised component.
    Component,
}

/// Degenerate-input conditions recorded alongside a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fallback {
    /// The query had no terms, so nothing could be scored.
    EmptyQuery,
    /// Query expansion had no GUI terms to append.
    ExpandNoGuiTerms,
    /// Query replacement had no GUI terms; the report query was used instead.
    ReplaceUsedBase,
    /// Filtering had no GUI-related files; the ranking was left unfiltered.
    FilterNoGuiFiles,
    /// Boosting had no boosted files; the ranking order was left unchanged.
    BoostNoGuiFiles,
}

impl fmt::Display for Fallback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Fallback::EmptyQuery => "empty_query",
            Fallback::ExpandNoGuiTerms => "expand_no_gui_terms",
            Fallback::ReplaceUsedBase => "replace_used_base",
            Fallback::FilterNoGuiFiles => "filter_no_gui_files",
            Fallback::BoostNoGuiFiles => "boost_no_gui_files",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedEntry {
    pub path: String,
    pub score: f64,
    #[serde(default)]
    pub gui_flags: BTreeSet<GuiFlag>,
}

/// A scored ranking of corpus files, best first.
///
/// Scorers emit entries sorted by descending score with ties broken by path;
/// re-ranking may later move entries without touching their scores.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RankedList {
    pub entries: Vec<RankedEntry>,
    pub query_terms_used: Vec<String>,
    #[serde(default)]
    pub fallbacks: BTreeSet<Fallback>,
}

impl RankedList {
    /// Builds a list from unsorted `(path, score)` pairs, dropping zero scores.
    pub fn from_scores(scores: impl IntoIterator<Item = (String, f64)>, query: &[String]) -> Self {
        let mut entries: Vec<RankedEntry> = scores
            .into_iter()
            .filter(|(_, s)| *s > 0.0)
            .map(|(path, score)| RankedEntry {
                path,
                score,
                gui_flags: BTreeSet::new(),
            })
            .collect();
        entries.sort_by(score_then_path);
        Self {
            entries,
            query_terms_used: query.to_vec(),
            fallbacks: BTreeSet::new(),
        }
    }

    pub fn paths(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.path.as_str()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn truncate(&mut self, k: usize) {
        self.entries.truncate(k);
    }

    /// 1-based rank of `path`, if present.
    pub fn rank_of(&self, path: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.path == path).map(|i| i + 1)
    }

    /// Checks the scorer-output ordering: non-increasing scores, path
    /// tie-break, no duplicate paths.
    pub fn is_score_ordered(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| score_then_path(&w[0], &w[1]) == Ordering::Less)
    }

    pub fn has_unique_paths(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.entries.iter().all(|e| seen.insert(e.path.as_str()))
    }
}

fn score_then_path(a: &RankedEntry, b: &RankedEntry) -> Ordering {
    b.score.total_cmp(&a.score).then_with(|| a.path.cmp(&b.path))
}
