// SPDX-License-Identifier: Apache-2.0
//! Reproduction traces and the execution model built from them.
//!
//! A trace is an ordered list of screens; the last one is the buggy screen.
//! Every earlier screen carries exactly one exercised component, the
//! interaction that led to the next screen. The execution model merges traces
//! into a graph whose nodes are fingerprinted screens and whose edges are
//! those interactions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Closed vocabulary of GUI interactions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    Click,
    Type,
    LongClick,
    Swipe,
    Pinch,
    Open,
    Press,
    Select,
    Back,
}

impl Action {
    pub const ALL: [Action; 9] = [
        Action::Click,
        Action::Type,
        Action::LongClick,
        Action::Swipe,
        Action::Pinch,
        Action::Open,
        Action::Press,
        Action::Select,
        Action::Back,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Action::Click => "click",
            Action::Type => "type",
            Action::LongClick => "long-click",
            Action::Swipe => "swipe",
            Action::Pinch => "pinch",
            Action::Open => "open",
            Action::Press => "press",
            Action::Select => "select",
            Action::Back => "back",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Action {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Action::ALL
            .into_iter()
            .find(|a| a.as_str() == norm)
            .ok_or_else(|| Error::Input(format!("unknown action {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuiComponent {
    #[serde(default)]
    pub resource_id: String,
    #[serde(rename = "type", default)]
    pub component_type: String,
    #[serde(default)]
    pub text: String,
    #[serde(default)]
    pub content_desc: String,
    #[serde(default)]
    pub exercised: bool,
    #[serde(default)]
    pub action: Option<Action>,
}

impl GuiComponent {
    /// Resource id without the `package:id/` qualifier that UI dumps add
    /// (`com.example.app:id/save_button` -> `save_button`).
    pub fn local_id(&self) -> &str {
        self.resource_id
            .rsplit_once(":id/")
            .map_or(self.resource_id.as_str(), |(_, name)| name)
    }

    /// The interaction performed on this component, if it was exercised.
    /// An exercised component without an explicit action counts as a click.
    pub fn interaction(&self) -> Option<Action> {
        self.exercised.then(|| self.action.unwrap_or(Action::Click))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Screen {
    /// Position in the trace; not part of the file format.
    #[serde(skip)]
    pub index: usize,
    pub activity_name: String,
    #[serde(default)]
    pub window_name: String,
    #[serde(default)]
    pub components: Vec<GuiComponent>,
}

impl Screen {
    pub fn exercised(&self) -> Option<&GuiComponent> {
        self.components.iter().find(|c| c.exercised)
    }

    /// Component with the given non-empty resource id.
    pub fn component_by_id(&self, resource_id: &str) -> Option<&GuiComponent> {
        if resource_id.is_empty() {
            return None;
        }
        self.components.iter().find(|c| c.resource_id == resource_id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproTrace {
    pub trace_id: String,
    pub screens: Vec<Screen>,
}

// Raw file shape: actions arrive as free strings so that an unknown action can
// be reported against its screen index.
#[derive(Deserialize)]
struct RawTrace {
    trace_id: String,
    screens: Vec<RawScreen>,
}

#[derive(Deserialize)]
struct RawScreen {
    activity_name: String,
    #[serde(default)]
    window_name: String,
    #[serde(default)]
    components: Vec<RawComponent>,
}

#[derive(Deserialize)]
struct RawComponent {
    #[serde(default)]
    resource_id: String,
    #[serde(rename = "type", default)]
    component_type: String,
    #[serde(default)]
    text: String,
    #[serde(default)]
    content_desc: String,
    #[serde(default)]
    exercised: bool,
    #[serde(default)]
    action: Option<String>,
}

impl ReproTrace {
    pub fn from_json(raw: &str) -> Result<Self> {
        let parsed: RawTrace = serde_json::from_str(raw).map_err(|e| Error::json("trace", &e))?;
        let trace_id = parsed.trace_id;
        let mut screens = Vec::with_capacity(parsed.screens.len());
        for (index, s) in parsed.screens.into_iter().enumerate() {
            let mut components = Vec::with_capacity(s.components.len());
            for c in s.components {
                let action = match c.action.as_deref() {
                    None => None,
                    Some(a) => Some(a.parse::<Action>().map_err(|_| Error::TraceValidation {
                        trace_id: trace_id.clone(),
                        screen: index,
                        reason: format!("action {a:?} is not in the action vocabulary"),
                    })?),
                };
                components.push(GuiComponent {
                    resource_id: c.resource_id,
                    component_type: c.component_type,
                    text: c.text,
                    content_desc: c.content_desc,
                    exercised: c.exercised,
                    action,
                });
            }
            screens.push(Screen {
                index,
                activity_name: s.activity_name,
                window_name: s.window_name,
                components,
            });
        }
        let trace = ReproTrace { trace_id, screens };
        trace.validate()?;
        Ok(trace)
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

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |screen: usize, reason: String| Error::TraceValidation {
            trace_id: self.trace_id.clone(),
            screen,
            reason,
        };
        if self.screens.is_empty() {
            return Err(fail(0, "trace has no screens".into()));
        }
        let last = self.screens.len() - 1;
        for (i, s) in self.screens.iter().enumerate() {
            if s.index != i {
                return Err(fail(i, format!("screen index {} out of order", s.index)));
            }
            if s.activity_name.trim().is_empty() {
                return Err(fail(i, "empty activity_name".into()));
            }
            if let Some(c) = s.components.iter().find(|c| c.action.is_some() && !c.exercised) {
                return Err(fail(
                    i,
                    format!("component {:?} has an action but is not exercised", c.resource_id),
                ));
            }
            let exercised = s.components.iter().filter(|c| c.exercised).count();
            if exercised > 1 {
                return Err(fail(
                    i,
                    format!("{exercised} exercised components (at most one allowed)"),
                ));
            }
            if i < last && exercised == 0 {
                return Err(fail(i, "no exercised component leads to the next screen".into()));
            }
        }
        Ok(())
    }

    /// The last screen of the trace.
    pub fn buggy_screen(&self) -> &Screen {
        self.screens.last().expect("validated trace is nonempty")
    }
}

pub const DEFAULT_WINDOW: usize = 3;

/// The final `min(window, len)` screens in trace order: the buggy screen and
/// up to `window - 1` screens before it.
pub fn last_screens(trace: &ReproTrace, window: usize) -> Result<&[Screen]> {
    if window == 0 {
        return Err(Error::Config("screen window must be at least 1".into()));
    }
    let n = trace.screens.len();
    Ok(&trace.screens[n.saturating_sub(window)..])
}

/// Screen identity: a digest of the activity, window name and the sorted set
/// of non-empty component resource ids. Visible text is deliberately left out
/// so dynamic labels do not split one screen into many nodes.
pub fn screen_fingerprint(screen: &Screen) -> String {
    let ids: BTreeSet<&str> = screen
        .components
        .iter()
        .map(|c| c.resource_id.as_str())
        .filter(|id| !id.is_empty())
        .collect();
    let key =
        serde_json::to_vec(&(&screen.activity_name, &screen.window_name, ids)).expect("fingerprint key serializes");
    let digest = Sha256::digest(&key);
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub src: String,
    pub action: Action,
    pub resource_id: String,
    pub dst: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ExecutionModel {
    pub nodes: BTreeMap<String, Screen>,
    /// Insertion order is significant: it breaks ties when mapping steps.
    pub edges: Vec<Edge>,
    #[serde(rename = "entries")]
    pub entry_fingerprints: BTreeSet<String>,
}

impl ExecutionModel {
    pub fn build<'a>(traces: impl IntoIterator<Item = &'a ReproTrace>) -> Result<Self> {
        let mut model = Self::default();
        let mut seen_edges = BTreeSet::new();
        let mut any = false;
        for trace in traces {
            any = true;
            trace.validate()?;
            let prints: Vec<String> = trace.screens.iter().map(screen_fingerprint).collect();
            for (screen, fp) in trace.screens.iter().zip(&prints) {
                model.nodes.entry(fp.clone()).or_insert_with(|| Screen {
                    index: 0,
                    ..screen.clone()
                });
            }
            model.entry_fingerprints.insert(prints[0].clone());
            for (i, pair) in prints.windows(2).enumerate() {
                let comp = trace.screens[i]
                    .exercised()
                    .expect("validated: non-final screens are exercised");
                let edge = Edge {
                    src: pair[0].clone(),
                    action: comp.interaction().expect("exercised"),
                    resource_id: comp.resource_id.clone(),
                    dst: pair[1].clone(),
                };
                if seen_edges.insert(edge.clone()) {
                    model.edges.push(edge);
                }
            }
        }
        if !any {
            return Err(Error::Input("no traces to build a model from".into()));
        }
        Ok(model)
    }

    /// Component an edge was performed on, resolved on the canonical source
    /// screen. Edges on components without a resource id have none.
    pub fn edge_component(&self, edge: &Edge) -> Option<&GuiComponent> {
        self.nodes.get(&edge.src)?.component_by_id(&edge.resource_id)
    }

    pub fn outgoing<'a>(&'a self, fingerprint: &'a str) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges.iter().filter(move |e| e.src == fingerprint)
    }

    pub fn edge_set(&self) -> BTreeSet<&Edge> {
        self.edges.iter().collect()
    }

    pub fn node_set(&self) -> BTreeSet<&str> {
        self.nodes.keys().map(String::as_str).collect()
    }

    /// Fewest-edges path from `from` to `to`, following edges in insertion
    /// order. `Some(vec![])` when the two are the same node.
    pub fn shortest_path<'a>(&'a self, from: &str, to: &str) -> Option<Vec<&'a Edge>> {
        if from == to {
            return Some(Vec::new());
        }
        let mut prev: BTreeMap<&str, &Edge> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        let mut visited = BTreeSet::from([from]);
        while let Some(node) = queue.pop_front() {
            for e in self.edges.iter().filter(|e| e.src == node) {
                if !visited.insert(e.dst.as_str()) {
                    continue;
                }
                prev.insert(e.dst.as_str(), e);
                if e.dst == to {
                    let mut path = vec![e];
                    let mut cur = e.src.as_str();
                    while cur != from {
                        let step = prev[cur];
                        path.push(step);
                        cur = step.src.as_str();
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(e.dst.as_str());
            }
        }
        None
    }

    /// True when the fingerprints of `trace` form a walk along model edges.
    pub fn admits_walk(&self, trace: &ReproTrace) -> bool {
        let prints: Vec<String> = trace.screens.iter().map(screen_fingerprint).collect();
        prints.iter().all(|p| self.nodes.contains_key(p))
            && prints
                .windows(2)
                .all(|w| self.edges.iter().any(|e| e.src == w[0] && e.dst == w[1]))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        let mut model: Self = serde_json::from_str(raw).map_err(|e| Error::json("execution model", &e))?;
        for e in &model.edges {
            if !model.nodes.contains_key(&e.src) || !model.nodes.contains_key(&e.dst) {
                return Err(Error::Input(format!(
                    "edge {} -> {} references an unknown node",
                    e.src, e.dst
                )));
            }
        }
        if let Some(bad) = model.entry_fingerprints.iter().find(|f| !model.nodes.contains_key(*f)) {
            return Err(Error::Input(format!("entry {bad} is not a node")));
        }
        let unique: BTreeSet<_> = model.edges.iter().collect();
        if unique.len() != model.edges.len() {
            return Err(Error::Input("duplicate edges in execution model".into()));
        }
        for screen in model.nodes.values_mut() {
            screen.index = 0;
        }
        Ok(model)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&raw)
    }
}
