// SPDX-License-Identifier: Apache-2.0
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::s2r::S2RStep;
use crate::error::{Error, Result};
use crate::gui::{Action, Edge, ExecutionModel};
use crate::mapping::component_terms;
use crate::text::Preprocessor;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchParams {
    /// Minimum Jaccard similarity for a match.
    pub threshold: f64,
    /// Runner-up edges this close to the best make the match ambiguous.
    pub ambiguity_band: f64,
}

impl Default for MatchParams {
    fn default() -> Self {
        Self {
            threshold: 0.5,
            ambiguity_band: 0.05,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchStatus {
    Matched,
    Ambiguous,
    Unmatched,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepMatch {
    pub step: S2RStep,
    /// Best-scoring edge and its position in `model.edges`. Present for
    /// ambiguous matches too, as the earliest of the tied candidates.
    pub matched_edge: Option<Edge>,
    pub edge_index: Option<usize>,
    pub similarity: f64,
    pub status: MatchStatus,
}

/// |a ∩ b| / |a ∪ b|, 0 for two empty sets.
pub fn jaccard<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 0.0;
    }
    a.intersection(b).count() as f64 / union as f64
}

fn same_action(a: Action, b: Action) -> bool {
    let canon = |x| if x == Action::Press { Action::Click } else { x };
    canon(a) == canon(b)
}

/// Maps each step onto the model edge whose component best matches it.
///
/// Candidates are edges with the step's action. A step's similarity to an
/// edge is the Jaccard similarity between the edge component's terms and the
/// step's object terms, or its object2 terms when those match better (`type
/// 'x' in the search field` names the component in object2).
pub fn map_steps_to_model(
    steps: &[S2RStep],
    model: &ExecutionModel,
    pre: &Preprocessor,
    params: &MatchParams,
) -> Vec<StepMatch> {
    let edge_terms: Vec<BTreeSet<String>> = model
        .edges
        .iter()
        .map(|e| {
            model
                .edge_component(e)
                .map(|c| component_terms(c, pre))
                .unwrap_or_default()
        })
        .collect();

    steps
        .iter()
        .map(|step| {
            let object: BTreeSet<String> = pre.preprocess(&step.object).into_iter().collect();
            let object2: BTreeSet<String> = step
                .object2
                .as_deref()
                .map(|o| pre.preprocess(o).into_iter().collect())
                .unwrap_or_default();
            let scored: Vec<(usize, f64)> = model
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| same_action(e.action, step.action))
                .map(|(i, _)| {
                    let sim = jaccard(&object, &edge_terms[i]).max(jaccard(&object2, &edge_terms[i]));
                    (i, sim)
                })
                .collect();
            // Earliest edge wins ties.
            let best = scored
                .iter()
                .copied()
                .fold(None::<(usize, f64)>, |acc, (i, s)| match acc {
                    Some((_, bs)) if bs >= s => acc,
                    _ => Some((i, s)),
                });
            let Some((best_i, best_sim)) = best else {
                return StepMatch {
                    step: step.clone(),
                    matched_edge: None,
                    edge_index: None,
                    similarity: 0.0,
                    status: MatchStatus::Unmatched,
                };
            };
            let status = if best_sim < params.threshold {
                MatchStatus::Unmatched
            } else if scored
                .iter()
                .any(|&(i, s)| i != best_i && s >= best_sim - params.ambiguity_band)
            {
                MatchStatus::Ambiguous
            } else {
                MatchStatus::Matched
            };
            let keep = status != MatchStatus::Unmatched;
            StepMatch {
                step: step.clone(),
                matched_edge: keep.then(|| model.edges[best_i].clone()),
                edge_index: keep.then_some(best_i),
                similarity: best_sim,
                status,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepGap {
    /// Indices into the match list of the two matched steps around the gap.
    pub after_step: usize,
    pub before_step: usize,
    pub from: String,
    pub to: String,
    pub missing: Vec<Edge>,
    pub infeasible: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MissingStepReport {
    pub gaps: Vec<StepGap>,
}

impl MissingStepReport {
    pub fn missing_edges(&self) -> impl Iterator<Item = &Edge> {
        self.gaps.iter().flat_map(|g| &g.missing)
    }

    pub fn has_infeasible(&self) -> bool {
        self.gaps.iter().any(|g| g.infeasible)
    }
}

/// Finds interactions the report skipped: whenever a matched step does not
/// start where the previous matched step ended, the shortest model path
/// between the two is reported, or the gap is flagged infeasible.
pub fn detect_missing_steps(matches: &[StepMatch], model: &ExecutionModel) -> MissingStepReport {
    let matched: Vec<(usize, &Edge)> = matches
        .iter()
        .enumerate()
        .filter(|(_, m)| m.status == MatchStatus::Matched)
        .filter_map(|(i, m)| m.matched_edge.as_ref().map(|e| (i, e)))
        .collect();
    let mut gaps = Vec::new();
    for pair in matched.windows(2) {
        let (i, prev) = pair[0];
        let (j, next) = pair[1];
        if prev.dst == next.src {
            continue;
        }
        let path = model.shortest_path(&prev.dst, &next.src);
        gaps.push(StepGap {
            after_step: i,
            before_step: j,
            from: prev.dst.clone(),
            to: next.src.clone(),
            infeasible: path.is_none(),
            missing: path.unwrap_or_default().into_iter().cloned().collect(),
        });
    }
    MissingStepReport { gaps }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suggestion {
    pub action: Action,
    pub resource_id: String,
    pub text: String,
    pub dst: String,
}

/// Interactions leaving a screen, ordered by action then resource id.
pub fn suggest_next_steps(model: &ExecutionModel, fingerprint: &str) -> Result<Vec<Suggestion>> {
    if !model.nodes.contains_key(fingerprint) {
        return Err(Error::UnknownFingerprint(fingerprint.to_owned()));
    }
    let mut out: Vec<Suggestion> = model
        .outgoing(fingerprint)
        .map(|e| Suggestion {
            action: e.action,
            resource_id: e.resource_id.clone(),
            text: model.edge_component(e).map(|c| c.text.clone()).unwrap_or_default(),
            dst: e.dst.clone(),
        })
        .collect();
    out.sort_by(|a, b| (a.action, &a.resource_id, &a.dst).cmp(&(b.action, &b.resource_id, &b.dst)));
    out.dedup_by(|a, b| a.action == b.action && a.resource_id == b.resource_id);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gui::screen_fingerprint;
    use crate::gui::tests::{comp, screen, trace};
    use crate::gui::ReproTrace;
    use crate::report::parse_s2r;
    use proptest::prelude::*;

    fn step(s: &str) -> S2RStep {
        parse_s2r(s).unwrap()
    }

    fn run(steps: &[&str], model: &ExecutionModel) -> Vec<StepMatch> {
        let steps: Vec<S2RStep> = steps.iter().map(|s| step(s)).collect();
        map_steps_to_model(&steps, model, &Preprocessor::default(), &MatchParams::default())
    }

    fn editor_trace() -> ReproTrace {
        trace(
            "t",
            vec![
                screen("a.Editor", vec![comp("save_button", "Save", Some("click"))]),
                screen("a.List", vec![]),
            ],
        )
    }

    #[test]
    fn exact_component_match() {
        let model = ExecutionModel::build([&editor_trace()]).unwrap();
        let m = run(&["Click on the save button"], &model);
        // {save, button} vs {save, button} ∪ {save}: 2 / 2.
        assert_eq!(m[0].status, MatchStatus::Matched);
        assert_eq!(m[0].similarity, 1.0);
        assert_eq!(m[0].edge_index, Some(0));
    }

    #[test]
    fn no_overlap_is_unmatched() {
        let model = ExecutionModel::build([&editor_trace()]).unwrap();
        let m = run(&["Click the purple elephant"], &model);
        assert_eq!(m[0].status, MatchStatus::Unmatched);
        assert!(m[0].matched_edge.is_none());
    }

    #[test]
    fn action_must_agree() {
        let model = ExecutionModel::build([&editor_trace()]).unwrap();
        assert_eq!(
            run(&["Swipe the save button"], &model)[0].status,
            MatchStatus::Unmatched
        );
        assert_eq!(run(&["Press the save button"], &model)[0].status, MatchStatus::Matched);
    }

    #[test]
    fn identical_components_are_ambiguous() {
        let t = trace(
            "t",
            vec![
                screen("a.One", vec![comp("ok_button", "OK", Some("click"))]),
                screen("a.Two", vec![comp("ok_button", "OK", Some("click"))]),
                screen("a.Three", vec![]),
            ],
        );
        let model = ExecutionModel::build([&t]).unwrap();
        let m = run(&["Tap the OK button"], &model);
        assert_eq!(m[0].status, MatchStatus::Ambiguous);
        assert_eq!(m[0].edge_index, Some(0));
    }

    fn gap_model() -> (ExecutionModel, Vec<String>) {
        let t = trace(
            "t",
            vec![
                screen("a.A", vec![comp("open_notes", "Notes", Some("click"))]),
                screen("a.B", vec![comp("new_note", "New", Some("click"))]),
                screen("a.C", vec![comp("save_button", "Save", Some("click"))]),
                screen("a.D", vec![]),
            ],
        );
        let prints = t.screens.iter().map(screen_fingerprint).collect();
        (ExecutionModel::build([&t]).unwrap(), prints)
    }

    #[test]
    fn planted_gap_is_reported() {
        let (model, fp) = gap_model();
        let m = run(&["Tap open notes", "Tap the save button"], &model);
        let report = detect_missing_steps(&m, &model);
        assert_eq!(report.gaps.len(), 1);
        let missing: Vec<_> = report.missing_edges().collect();
        assert_eq!(missing.len(), 1);
        assert_eq!(
            (missing[0].src.as_str(), missing[0].dst.as_str()),
            (fp[1].as_str(), fp[2].as_str())
        );
        assert!(!report.has_infeasible());
    }

    #[test]
    fn adjacent_steps_have_no_gap() {
        let (model, _) = gap_model();
        let m = run(&["Tap open notes", "Tap new note", "Tap save button"], &model);
        assert!(detect_missing_steps(&m, &model).gaps.is_empty());
    }

    #[test]
    fn backwards_gap_is_infeasible() {
        let (model, _) = gap_model();
        let m = run(&["Tap save button", "Tap open notes"], &model);
        let report = detect_missing_steps(&m, &model);
        assert!(report.has_infeasible());
        assert!(report.gaps[0].missing.is_empty());
    }

    #[test]
    fn suggestions() {
        let t = trace(
            "t1",
            vec![
                screen(
                    "a.Home",
                    vec![comp("zeta", "Z", Some("click")), comp("alpha", "A", None)],
                ),
                screen("a.Z", vec![]),
            ],
        );
        let t2 = trace(
            "t2",
            vec![
                screen(
                    "a.Home",
                    vec![comp("zeta", "Z", None), comp("alpha", "A", Some("click"))],
                ),
                screen("a.A", vec![]),
            ],
        );
        let model = ExecutionModel::build([&t, &t2]).unwrap();
        let home = screen_fingerprint(&t.screens[0]);
        let s = suggest_next_steps(&model, &home).unwrap();
        assert_eq!(
            s.iter().map(|s| s.resource_id.as_str()).collect::<Vec<_>>(),
            ["alpha", "zeta"]
        );
        assert_eq!(s[0].text, "A");
        let leaf = screen_fingerprint(&t.screens[1]);
        assert!(suggest_next_steps(&model, &leaf).unwrap().is_empty());
        assert!(matches!(
            suggest_next_steps(&model, "nope"),
            Err(Error::UnknownFingerprint(_))
        ));
    }

    proptest! {
        #[test]
        fn jaccard_is_symmetric_and_bounded(
            a in proptest::collection::btree_set("[a-e]", 0..5),
            b in proptest::collection::btree_set("[a-e]", 0..5),
        ) {
            let ab = jaccard(&a, &b);
            prop_assert_eq!(ab, jaccard(&b, &a));
            prop_assert!((0.0..=1.0).contains(&ab));
        }
    }
}
