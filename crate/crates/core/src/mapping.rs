// SPDX-License-Identifier: Apache-2.0
//! GUI terms and GUI-related files for a window of trace screens.
//!
//! Three strategies link source files to the reproduction trace:
//!
//! * activity: the file's class name equals the basename of an activity or
//!   window name on a screen in the window;
//! * listener: the file references the resource id of an exercised component;
//! * component: the file's terms cover at least a threshold fraction of the
//!   terms describing an exercised component.
//!
//! Boosting uses the first two (name and id evidence); filtering uses all
//! three, so the boosted set is always contained in the filter set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gui::{last_screens, GuiComponent, ReproTrace, Screen};
use crate::index::CorpusIndex;
use crate::ranking::GuiFlag;
use crate::text::Preprocessor;

pub const DEFAULT_COMPONENT_THRESHOLD: f64 = 0.5;

/// Which screen strings contribute GUI terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermSource {
    Activity,
    WindowName,
    ComponentId,
    ComponentText,
    ContentDesc,
    Type,
}

impl TermSource {
    pub const ALL: [TermSource; 6] = [
        TermSource::Activity,
        TermSource::WindowName,
        TermSource::ComponentId,
        TermSource::ComponentText,
        TermSource::ContentDesc,
        TermSource::Type,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TermSource::Activity => "activity",
            TermSource::WindowName => "window_name",
            TermSource::ComponentId => "component_id",
            TermSource::ComponentText => "component_text",
            TermSource::ContentDesc => "content_desc",
            TermSource::Type => "type",
        }
    }

    pub fn all() -> BTreeSet<TermSource> {
        Self::ALL.into_iter().collect()
    }
}

impl fmt::Display for TermSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TermSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        TermSource::ALL.into_iter().find(|t| t.as_str() == norm).ok_or_else(|| {
            Error::Config(format!(
                "unknown term source {s:?}; valid options: activity, window_name, \
                     component_id, component_text, content_desc, type"
            ))
        })
    }
}

/// Parses `all` or a `+`/`,`-separated list of term sources.
pub fn parse_term_sources(s: &str) -> Result<BTreeSet<TermSource>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TermSource::all());
    }
    let set = s
        .split(['+', ','])
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<BTreeSet<_>>>()?;
    if set.is_empty() {
        return Err(Error::Config("no GUI term sources selected".into()));
    }
    Ok(set)
}

/// Canonical text form used in CSV rows: `all`, or names joined by `+`.
pub fn format_term_sources(set: &BTreeSet<TermSource>) -> String {
    if set.len() == TermSource::ALL.len() {
        "all".into()
    } else {
        set.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("+")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GuiContext {
    /// GUI terms with multiplicity, in screen then component order.
    pub terms: Vec<String>,
    pub activity_files: BTreeSet<String>,
    pub listener_files: BTreeSet<String>,
    pub component_files: BTreeSet<String>,
    pub window_used: usize,
}

impl GuiContext {
    /// Files kept by filtering: the union of all three strategies.
    pub fn gui_related(&self) -> BTreeSet<&str> {
        self.activity_files
            .iter()
            .chain(&self.listener_files)
            .chain(&self.component_files)
            .map(String::as_str)
            .collect()
    }

    /// Files moved to the top by boosting: activity and listener matches.
    pub fn boosted(&self) -> BTreeSet<&str> {
        self.activity_files
            .iter()
            .chain(&self.listener_files)
            .map(String::as_str)
            .collect()
    }

    pub fn flags_for(&self, path: &str) -> BTreeSet<GuiFlag> {
        let mut flags = BTreeSet::new();
        if self.activity_files.contains(path) {
            flags.insert(GuiFlag::Activity);
        }
        if self.listener_files.contains(path) {
            flags.insert(GuiFlag::Listener);
        }
        if self.component_files.contains(path) {
            flags.insert(GuiFlag::Component);
        }
        flags
    }

    pub fn term_bag(&self) -> BTreeMap<&str, u32> {
        let mut bag = BTreeMap::new();
        for t in &self.terms {
            *bag.entry(t.as_str()).or_default() += 1;
        }
        bag
    }
}

pub fn extract_gui_terms(
    trace: &ReproTrace,
    window: usize,
    sources: &BTreeSet<TermSource>,
    pre: &Preprocessor,
) -> Result<Vec<String>> {
    if sources.is_empty() {
        return Err(Error::Config("no GUI term sources selected".into()));
    }
    let mut terms = Vec::new();
    for screen in last_screens(trace, window)? {
        if sources.contains(&TermSource::Activity) {
            terms.extend(pre.preprocess(&screen.activity_name));
        }
        if sources.contains(&TermSource::WindowName) {
            terms.extend(pre.preprocess(&screen.window_name));
        }
        for c in &screen.components {
            for (source, value) in [
                (TermSource::ComponentId, c.local_id()),
                (TermSource::ComponentText, &c.text),
                (TermSource::ContentDesc, &c.content_desc),
                (TermSource::Type, &c.component_type),
            ] {
                if sources.contains(&source) {
                    terms.extend(pre.preprocess(value));
                }
            }
        }
    }
    Ok(terms)
}

/// Text after the final `.` (or `/`, for `package/Class` window names).
fn simple_name(qualified: &str) -> &str {
    qualified.rsplit(['.', '/']).next().unwrap_or(qualified).trim()
}

pub fn match_activity_files(trace: &ReproTrace, window: usize, corpus: &CorpusIndex) -> Result<BTreeSet<String>> {
    let names: BTreeSet<&str> = last_screens(trace, window)?
        .iter()
        .flat_map(|s| [simple_name(&s.activity_name), simple_name(&s.window_name)])
        .filter(|n| !n.is_empty())
        .collect();
    Ok(corpus
        .documents
        .iter()
        .filter(|d| names.contains(d.class_name.as_str()))
        .map(|d| d.path.clone())
        .collect())
}

fn exercised_in(screens: &[Screen]) -> impl Iterator<Item = &GuiComponent> {
    screens.iter().filter_map(Screen::exercised)
}

pub fn match_listener_files(trace: &ReproTrace, window: usize, corpus: &CorpusIndex) -> Result<BTreeSet<String>> {
    let ids: BTreeSet<String> = exercised_in(last_screens(trace, window)?)
        .map(|c| c.local_id().to_ascii_lowercase())
        .filter(|id| !id.is_empty())
        .collect();
    Ok(corpus
        .documents
        .iter()
        .filter(|d| !d.resource_id_refs.is_disjoint(&ids))
        .map(|d| d.path.clone())
        .collect())
}

/// Distinct terms describing a component: its id, label and accessibility text.
pub fn component_terms(c: &GuiComponent, pre: &Preprocessor) -> BTreeSet<String> {
    [c.local_id(), &c.text, &c.content_desc]
        .into_iter()
        .flat_map(|s| pre.preprocess(s))
        .collect()
}

pub fn match_component_files(
    trace: &ReproTrace,
    window: usize,
    corpus: &CorpusIndex,
    threshold: f64,
) -> Result<BTreeSet<String>> {
    if !(0.0..=1.0).contains(&threshold) || threshold == 0.0 {
        return Err(Error::Config(format!(
            "component match threshold must be in (0, 1], got {threshold}"
        )));
    }
    let pre = corpus.preprocessor();
    let wanted: Vec<BTreeSet<String>> = exercised_in(last_screens(trace, window)?)
        .map(|c| component_terms(c, &pre))
        .filter(|t| !t.is_empty())
        .collect();
    Ok(corpus
        .documents
        .iter()
        .filter(|d| {
            wanted.iter().any(|terms| {
                let hit = terms.iter().filter(|t| d.terms.contains_key(*t)).count();
                hit as f64 >= threshold * terms.len() as f64
            })
        })
        .map(|d| d.path.clone())
        .collect())
}

pub fn gui_context(
    trace: &ReproTrace,
    window: usize,
    corpus: &CorpusIndex,
    sources: &BTreeSet<TermSource>,
    component_threshold: f64,
) -> Result<GuiContext> {
    let pre = corpus.preprocessor();
    Ok(GuiContext {
        terms: extract_gui_terms(trace, window, sources, &pre)?,
        activity_files: match_activity_files(trace, window, corpus)?,
        listener_files: match_listener_files(trace, window, corpus)?,
        component_files: match_component_files(trace, window, corpus, component_threshold)?,
        window_used: window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::SourceDocument;
    use crate::gui::tests::{comp, screen, trace};
    use crate::index::ScoringParams;
    use crate::text::PreprocessOptions;

    fn corpus(files: &[(&str, &str)]) -> CorpusIndex {
        let pre = Preprocessor::default();
        let docs = files
            .iter()
            .enumerate()
            .map(|(i, (p, raw))| SourceDocument::from_text(i as u32, p, raw, &pre, &BTreeSet::new()).unwrap())
            .collect();
        CorpusIndex::build(docs, ScoringParams::default(), PreprocessOptions::default()).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn activity_terms() {
        let t = trace("t", vec![screen("com.app.SettingsActivity", vec![])]);
        let terms =
            extract_gui_terms(&t, 3, &BTreeSet::from([TermSource::Activity]), &Preprocessor::default()).unwrap();
        assert_eq!(terms, ["com", "app", "settings", "activity"]);
    }

    #[test]
    fn repeated_component_doubles_multiplicity() {
        let t = trace(
            "t",
            vec![
                screen("a.A", vec![comp("save_button", "Save", Some("click"))]),
                screen("a.A", vec![comp("save_button", "Save", None)]),
            ],
        );
        let ctx_terms = extract_gui_terms(
            &t,
            2,
            &BTreeSet::from([TermSource::ComponentId]),
            &Preprocessor::default(),
        )
        .unwrap();
        assert_eq!(ctx_terms, ["save", "button", "save", "button"]);
    }

    #[test]
    fn empty_text_source_gives_no_terms() {
        let t = trace("t", vec![screen("a.A", vec![comp("x_y", "", None)])]);
        let terms = extract_gui_terms(
            &t,
            1,
            &BTreeSet::from([TermSource::ComponentText]),
            &Preprocessor::default(),
        )
        .unwrap();
        assert!(terms.is_empty());
        assert!(extract_gui_terms(&t, 1, &BTreeSet::new(), &Preprocessor::default())
            .unwrap_err()
            .is_config());
    }

    #[test]
    fn activity_basename_matching() {
        let c = corpus(&[
            ("ui/SettingsActivity.java", "class SettingsActivity {}"),
            ("old/SettingsActivity.java", "class SettingsActivity {}"),
            ("ui/Main.java", "class Main {}"),
        ]);
        let t = trace("t", vec![screen("com.app.SettingsActivity", vec![])]);
        assert_eq!(
            match_activity_files(&t, 1, &c).unwrap(),
            set(&["old/SettingsActivity.java", "ui/SettingsActivity.java"])
        );
        let none = trace("t", vec![screen("com.app.Nowhere", vec![])]);
        assert!(match_activity_files(&none, 1, &c).unwrap().is_empty());
    }

    #[test]
    fn listener_matching() {
        let c = corpus(&[
            (
                "Editor.java",
                "findViewById(R.id.save_button).setOnClickListener(this);",
            ),
            ("Other.java", "R.id.cancel"),
        ]);
        let t = trace(
            "t",
            vec![
                screen("a.A", vec![comp("save_button", "Save", Some("click"))]),
                screen("a.B", vec![]),
            ],
        );
        assert_eq!(match_listener_files(&t, 2, &c).unwrap(), set(&["Editor.java"]));

        let unlabeled = trace(
            "t",
            vec![
                screen("a.A", vec![comp("", "Save", Some("click"))]),
                screen("a.B", vec![]),
            ],
        );
        assert!(match_listener_files(&unlabeled, 2, &c).unwrap().is_empty());

        let idle = trace("t", vec![screen("a.A", vec![comp("save_button", "", None)])]);
        assert!(match_listener_files(&idle, 1, &c).unwrap().is_empty());
    }

    #[test]
    fn component_matching_threshold_is_inclusive() {
        let c = corpus(&[
            ("Both.java", "save button"),
            ("Half.java", "save later"),
            ("None.java", "unrelated words"),
        ]);
        let t = trace(
            "t",
            vec![
                screen("a.A", vec![comp("save_button", "", Some("click"))]),
                screen("a.B", vec![]),
            ],
        );
        assert_eq!(
            match_component_files(&t, 2, &c, 0.5).unwrap(),
            set(&["Both.java", "Half.java"])
        );
        assert_eq!(match_component_files(&t, 2, &c, 1.0).unwrap(), set(&["Both.java"]));
        assert!(match_component_files(&t, 2, &c, 0.0).is_err());
    }

    #[test]
    fn context_subset_and_window() {
        let c = corpus(&[
            ("SettingsActivity.java", "R.id.dark_mode"),
            ("ThemeStore.java", "dark mode theme"),
        ]);
        let t = trace(
            "t",
            vec![
                screen(
                    "x.SettingsActivity",
                    vec![comp("dark_mode", "Dark mode", Some("click"))],
                ),
                screen("x.Main", vec![]),
            ],
        );
        let ctx = gui_context(&t, crate::gui::DEFAULT_WINDOW, &c, &TermSource::all(), 0.5).unwrap();
        assert_eq!(ctx.window_used, 3);
        assert!(ctx.boosted().is_subset(&ctx.gui_related()));
        // R.id.dark_mode tokenizes to dark + mode, so the activity also matches.
        assert_eq!(ctx.component_files, set(&["SettingsActivity.java", "ThemeStore.java"]));
        assert_eq!(
            ctx.flags_for("SettingsActivity.java"),
            BTreeSet::from([GuiFlag::Activity, GuiFlag::Listener, GuiFlag::Component])
        );

        let narrow = gui_context(&t, 1, &c, &TermSource::all(), 0.5).unwrap();
        assert!(narrow.gui_related().is_empty());
    }

    #[test]
    fn no_matches_anywhere() {
        let c = corpus(&[("A.java", "alpha"), ("B.java", "beta")]);
        let t = trace("t", vec![screen("x.Zed", vec![comp("qq_rr", "", None)])]);
        let ctx = gui_context(&t, 3, &c, &TermSource::all(), 0.5).unwrap();
        assert!(ctx.activity_files.is_empty() && ctx.listener_files.is_empty() && ctx.component_files.is_empty());
    }

    #[test]
    fn term_source_parsing() {
        assert_eq!(parse_term_sources("all").unwrap(), TermSource::all());
        let s = parse_term_sources("activity+component-text").unwrap();
        assert_eq!(format_term_sources(&s), "activity+component_text");
        assert!(parse_term_sources("pixels").unwrap_err().is_config());
        assert!(parse_term_sources("").unwrap_err().is_config());
    }
}
