// SPDX-License-Identifier: Apache-2.0
use std::fmt;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::s2r::leading_action;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    #[serde(rename = "OB")]
    Ob,
    #[serde(rename = "EB")]
    Eb,
    #[serde(rename = "S2R")]
    S2R,
    #[serde(rename = "OTHER")]
    Other,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Ob => "OB",
            Tag::Eb => "EB",
            Tag::S2R => "S2R",
            Tag::Other => "OTHER",
        }
    }

    pub fn parse(s: &str) -> Option<Tag> {
        match s.trim().to_ascii_uppercase().as_str() {
            "OB" => Some(Tag::Ob),
            "EB" => Some(Tag::Eb),
            "S2R" | "S2RS" => Some(Tag::S2R),
            "OTHER" => Some(Tag::Other),
            _ => None,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub text: String,
    /// Introduced by a numbered or bulleted list marker.
    pub list_item: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedSentence {
    pub text: String,
    pub tag: Tag,
}

fn number_marker(tok: &str) -> Option<u32> {
    let digits = tok.strip_suffix(['.', ')'])?;
    if !(1..=3).contains(&digits.len()) || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn is_bullet(tok: &str) -> bool {
    matches!(tok, "-" | "*" | "•")
}

/// Splits a report body into sentences.
///
/// Boundaries are line breaks, `.`/`!`/`?` at the end of a word, numbered
/// list markers (`1.`, `2)`) and `-`/`*` bullets. A number starts a list item
/// at the start of a line, or mid-line when it opens a list (`1.`) or
/// continues the previous one, so `Android 14.` stays a plain word.
/// Markers are dropped; sentence punctuation is kept.
pub fn segment_sentences(body: &str) -> Vec<Sentence> {
    let mut out = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    let mut list_item = false;
    let mut last_marker: Option<u32> = None;

    fn flush(out: &mut Vec<Sentence>, current: &mut Vec<&str>, list_item: &mut bool) {
        if !current.is_empty() {
            out.push(Sentence {
                text: current.join(" "),
                list_item: *list_item,
            });
            current.clear();
        }
        *list_item = false;
    }

    for line in body.lines() {
        flush(&mut out, &mut current, &mut list_item);
        for (i, tok) in line.split_whitespace().enumerate() {
            let marker = number_marker(tok)
                .filter(|&n| i == 0 || (last_marker.is_none() && n == 1) || last_marker.is_some_and(|m| n == m + 1));
            if let Some(n) = marker {
                last_marker = Some(n);
            }
            if marker.is_some() || (i == 0 && is_bullet(tok)) {
                flush(&mut out, &mut current, &mut list_item);
                list_item = true;
                continue;
            }
            current.push(tok);
            if tok.ends_with(['.', '!', '?']) && tok.chars().any(|c| c.is_alphanumeric()) {
                flush(&mut out, &mut current, &mut list_item);
            }
        }
    }
    flush(&mut out, &mut current, &mut list_item);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifierError(pub String);

impl fmt::Display for ClassifierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ClassifierError {}

/// Assigns one tag per sentence. Implementations may call out to a remote
/// service; failures make [`classify_sentences`] fall back to the heuristic.
pub trait SentenceClassifier: Send + Sync {
    fn name(&self) -> &str;
    fn classify(&self, sentences: &[Sentence]) -> Result<Vec<Tag>, ClassifierError>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyOutcome {
    pub sentences: Vec<TaggedSentence>,
    /// Name of the classifier whose tags were kept.
    pub classifier: String,
    pub warnings: Vec<String>,
}

pub fn classify_sentences(sentences: &[Sentence], port: &dyn SentenceClassifier) -> ClassifyOutcome {
    let mut warnings = Vec::new();
    let (tags, classifier) = match port.classify(sentences) {
        Ok(tags) if tags.len() == sentences.len() => (tags, port.name().to_owned()),
        Ok(tags) => {
            warnings.push(format!(
                "{} returned {} tags for {} sentences; using heuristic",
                port.name(),
                tags.len(),
                sentences.len()
            ));
            (heuristic_tags(sentences), HeuristicClassifier.name().to_owned())
        }
        Err(e) => {
            warnings.push(format!("{} failed: {e}; using heuristic", port.name()));
            (heuristic_tags(sentences), HeuristicClassifier.name().to_owned())
        }
    };
    for w in &warnings {
        log::warn!("{w}");
    }
    ClassifyOutcome {
        sentences: sentences
            .iter()
            .zip(tags)
            .map(|(s, tag)| TaggedSentence {
                text: s.text.clone(),
                tag,
            })
            .collect(),
        classifier,
        warnings,
    }
}

/// Keyword and lead-verb rules.
///
/// * lead verb from the action lexicon (imperative) -> S2R
/// * expectation markers (`should`, `expected`, `supposed to`) -> EB
/// * failure markers (`crash`, `error`, `instead`, `fails`, `does not`) -> OB
/// * list item with no other cue -> S2R
///
/// Version and device metadata (`App Version: 1.5.8`) is always OTHER.
#[derive(Debug, Clone, Copy, Default)]
pub struct HeuristicClassifier;

impl SentenceClassifier for HeuristicClassifier {
    fn name(&self) -> &str {
        "heuristic"
    }

    fn classify(&self, sentences: &[Sentence]) -> Result<Vec<Tag>, ClassifierError> {
        Ok(heuristic_tags(sentences))
    }
}

static METADATA: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"(?i)^\s*[a-z ]{0,24}\b(version|build|android|ios|os|device|model|phone|sdk|api level)\b[a-z ]{0,12}[:=#]",
    )
    .unwrap()
});
static BARE_VERSION: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)^\s*(v(ersion)?\s*)?\d+(\.\d+)+\s*\.?\s*$").unwrap());
static EXPECTED: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?i)\b(should|must|expected|expect|expecting|supposed to|ought to|would like)\b").unwrap()
});
static OBSERVED: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"(?i)\b(crash\w*|errors?|instead|fail\w*|does not|doesn't|did not|didn't|is not|isn't|not working|freez\w*|frozen|exceptions?|nothing happens|disappear\w*|wrong|broken|cannot|can't|unable|stuck|hangs?|lost|missing|empty|blank|null|nothing|gone|incorrect|ignored|resets?|reverts?|still|reappear\w*|comes? back|came back)\b",
    )
    .unwrap()
});

/// Imperative lead verbs outside the step-parser lexicon; they mark a step
/// for tagging but carry no GUI action.
const STEP_VERBS: &[&str] = &[
    "set", "enable", "disable", "turn", "toggle", "restart", "reboot", "rotate", "wait", "create", "add", "delete",
    "remove", "edit", "write", "start", "close", "change", "switch", "drag", "install", "log", "sign", "navigate",
    "return", "save", "share", "search", "check", "uncheck", "fill", "insert", "drop", "move", "rename",
];

const SUBJECT_MARKERS: &[&str] = &[
    "is", "are", "was", "were", "does", "doesn't", "did", "didn't", "has", "have", "keeps", "fails", "can", "can't",
    "cannot", "will", "won't", "never", "always",
];

const LEAD_FILLERS: &[&str] = &[
    "then",
    "next",
    "now",
    "first",
    "finally",
    "and",
    "please",
    "also",
    "again",
    "afterwards",
];

fn is_imperative(text: &str) -> bool {
    let words: Vec<String> = text
        .split_whitespace()
        .map(|w| {
            w.trim_matches(|c: char| !c.is_alphanumeric() && c != '-')
                .to_ascii_lowercase()
        })
        .filter(|w| !w.is_empty())
        .skip_while(|w| LEAD_FILLERS.contains(&w.as_str()))
        .collect();
    let refs: Vec<&str> = words.iter().map(String::as_str).collect();
    // "Search does not work": the lead word is a noun subject.
    if refs.get(1).is_some_and(|w| SUBJECT_MARKERS.contains(w)) {
        return false;
    }
    leading_action(&refs, true).is_some() || refs.first().is_some_and(|w| STEP_VERBS.contains(w))
}

pub(crate) fn heuristic_tag(s: &Sentence) -> Tag {
    let text = s.text.as_str();
    if METADATA.is_match(text) || BARE_VERSION.is_match(text) {
        return Tag::Other;
    }
    if is_imperative(text) {
        return Tag::S2R;
    }
    if EXPECTED.is_match(text) {
        return Tag::Eb;
    }
    if OBSERVED.is_match(text) {
        return Tag::Ob;
    }
    if s.list_item {
        return Tag::S2R;
    }
    Tag::Other
}

fn heuristic_tags(sentences: &[Sentence]) -> Vec<Tag> {
    sentences.iter().map(heuristic_tag).collect()
}
