// SPDX-License-Identifier: Apache-2.0
//! End-to-end localization: GUI context, query reformulation, scoring,
//! re-ranking and truncation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gui::{ReproTrace, DEFAULT_WINDOW};
use crate::index::{CorpusIndex, Scorer};
use crate::mapping::{gui_context, GuiContext, TermSource, DEFAULT_COMPONENT_THRESHOLD};
use crate::ranking::{Fallback, RankedList};
use crate::report::BugReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryStrategy {
    /// Report text only.
    Base,
    /// Report text followed by GUI terms.
    Expand,
    /// GUI terms only.
    Replace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RerankStrategy {
    None,
    Filter,
    Boost,
    #[serde(alias = "filter-boost")]
    FilterBoost,
}

impl QueryStrategy {
    pub const ALL: [QueryStrategy; 3] = [QueryStrategy::Base, QueryStrategy::Expand, QueryStrategy::Replace];

    pub fn as_str(self) -> &'static str {
        match self {
            QueryStrategy::Base => "base",
            QueryStrategy::Expand => "expand",
            QueryStrategy::Replace => "replace",
        }
    }
}

impl RerankStrategy {
    pub const ALL: [RerankStrategy; 4] = [
        RerankStrategy::None,
        RerankStrategy::Filter,
        RerankStrategy::Boost,
        RerankStrategy::FilterBoost,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RerankStrategy::None => "none",
            RerankStrategy::Filter => "filter",
            RerankStrategy::Boost => "boost",
            RerankStrategy::FilterBoost => "filter_boost",
        }
    }
}

impl fmt::Display for QueryStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for RerankStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QueryStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase();
        QueryStrategy::ALL
            .into_iter()
            .find(|q| q.as_str() == norm)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown query strategy {s:?}; valid options: base, expand, replace"
                ))
            })
    }
}

impl FromStr for RerankStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        RerankStrategy::ALL
            .into_iter()
            .find(|r| r.as_str() == norm)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown rerank strategy {s:?}; valid options: none, filter, boost, filter-boost"
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub scorer: Scorer,
    pub query_strategy: QueryStrategy,
    pub rerank_strategy: RerankStrategy,
    pub window: usize,
    pub term_sources: BTreeSet<TermSource>,
    pub expansion_weight: f64,
    pub top_k: usize,
    pub component_threshold: f64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            scorer: Scorer::Bm25,
            query_strategy: QueryStrategy::Base,
            rerank_strategy: RerankStrategy::None,
            window: DEFAULT_WINDOW,
            term_sources: TermSource::all(),
            expansion_weight: 1.0,
            top_k: 10,
            component_threshold: DEFAULT_COMPONENT_THRESHOLD,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.window == 0 {
            return Err(Error::Config("window must be at least 1".into()));
        }
        if !(self.expansion_weight.is_finite() && self.expansion_weight > 0.0) {
            return Err(Error::Config(format!(
                "expansion_weight must be positive, got {}",
                self.expansion_weight
            )));
        }
        if self.top_k == 0 {
            return Err(Error::Config("top_k must be at least 1".into()));
        }
        if self.term_sources.is_empty() {
            return Err(Error::Config("no GUI term sources selected".into()));
        }
        if !(self.component_threshold > 0.0 && self.component_threshold <= 1.0) {
            return Err(Error::Config(format!(
                "component_threshold must be in (0, 1], got {}",
                self.component_threshold
            )));
        }
        Ok(())
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(raw).map_err(|e| Error::Config(format!("config file: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Reformulates the report query. `expand` appends every GUI term
/// `round(expansion_weight)` times; `replace` falls back to the report terms
/// when there are no GUI terms.
pub fn build_query(
    report_terms: &[String],
    gui: &GuiContext,
    strategy: QueryStrategy,
    expansion_weight: f64,
) -> (Vec<String>, Option<Fallback>) {
    match strategy {
        QueryStrategy::Base => (report_terms.to_vec(), None),
        QueryStrategy::Expand => {
            let reps = expansion_weight.round().max(0.0) as usize;
            let mut q = report_terms.to_vec();
            for t in &gui.terms {
                q.extend(std::iter::repeat_n(t.clone(), reps));
            }
            let flag = gui.terms.is_empty().then_some(Fallback::ExpandNoGuiTerms);
            (q, flag)
        }
        QueryStrategy::Replace if gui.terms.is_empty() => (report_terms.to_vec(), Some(Fallback::ReplaceUsedBase)),
        QueryStrategy::Replace => (gui.terms.clone(), None),
    }
}

fn boost(mut ranked: RankedList, boosted: &BTreeSet<&str>) -> RankedList {
    if boosted.is_empty() {
        ranked.fallbacks.insert(Fallback::BoostNoGuiFiles);
        return ranked;
    }
    let (top, rest): (Vec<_>, Vec<_>) = ranked
        .entries
        .into_iter()
        .partition(|e| boosted.contains(e.path.as_str()));
    ranked.entries = top.into_iter().chain(rest).collect();
    ranked
}

fn filter(mut ranked: RankedList, related: &BTreeSet<&str>) -> RankedList {
    if related.is_empty() {
        ranked.fallbacks.insert(Fallback::FilterNoGuiFiles);
        return ranked;
    }
    ranked.entries.retain(|e| related.contains(e.path.as_str()));
    ranked
}

/// Re-ranks a scored list with GUI evidence. Scores are never changed; boosting
/// is a stable partition that moves boosted files ahead of the rest.
pub fn apply_rerank(ranked: RankedList, gui: &GuiContext, strategy: RerankStrategy) -> RankedList {
    if strategy == RerankStrategy::None {
        return ranked;
    }
    let mut ranked = match strategy {
        RerankStrategy::None => unreachable!(),
        RerankStrategy::Filter => filter(ranked, &gui.gui_related()),
        RerankStrategy::Boost => boost(ranked, &gui.boosted()),
        RerankStrategy::FilterBoost => boost(filter(ranked, &gui.gui_related()), &gui.boosted()),
    };
    for e in &mut ranked.entries {
        e.gui_flags = gui.flags_for(&e.path);
    }
    ranked
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Localization {
    pub report_id: String,
    pub config: PipelineConfig,
    pub context: GuiContext,
    pub ranking: RankedList,
}

#[derive(Serialize)]
struct OutputEntry<'a> {
    rank: usize,
    path: &'a str,
    score: f64,
    gui_flags: &'a BTreeSet<crate::ranking::GuiFlag>,
}

#[derive(Serialize)]
struct Output<'a> {
    report_id: &'a str,
    config: &'a PipelineConfig,
    fallbacks: Vec<String>,
    ranking: Vec<OutputEntry<'a>>,
}

impl Localization {
    /// Machine output: `{"report_id", "config", "fallbacks", "ranking": [{"rank",
    /// "path", "score", "gui_flags"}]}`.
    pub fn to_json(&self) -> String {
        let out = Output {
            report_id: &self.report_id,
            config: &self.config,
            fallbacks: self.ranking.fallbacks.iter().map(|f| f.to_string()).collect(),
            ranking: self
                .ranking
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| OutputEntry {
                    rank: i + 1,
                    path: &e.path,
                    score: e.score,
                    gui_flags: &e.gui_flags,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("localization serializes")
    }
}

/// Full pipeline without the final `top_k` cut.
pub fn rank_report(
    report: &BugReport,
    trace: &ReproTrace,
    index: &CorpusIndex,
    config: &PipelineConfig,
) -> Result<Localization> {
    config.validate()?;
    let context = gui_context(
        trace,
        config.window,
        index,
        &config.term_sources,
        config.component_threshold,
    )?;
    let report_terms = index.preprocessor().preprocess(&report.query_text());
    let (query, query_flag) = build_query(&report_terms, &context, config.query_strategy, config.expansion_weight);
    let mut ranking = index.rank(&query, config.scorer);
    ranking.fallbacks.extend(query_flag);
    let ranking = apply_rerank(ranking, &context, config.rerank_strategy);
    Ok(Localization {
        report_id: report.report_id.clone(),
        config: config.clone(),
        context,
        ranking,
    })
}

pub fn localize(
    report: &BugReport,
    trace: &ReproTrace,
    index: &CorpusIndex,
    config: &PipelineConfig,
) -> Result<Localization> {
    let mut out = rank_report(report, trace, index, config)?;
    out.ranking.truncate(config.top_k);
    Ok(out)
}
