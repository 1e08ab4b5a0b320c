// SPDX-License-Identifier: Apache-2.0
//! Pattern parser for steps to reproduce.
//!
//! A step is read into five slots, `[subject][action][object][preposition]
//! [object2]`, using a small verb lexicon instead of a dependency parse:
//!
//! ```text
//! Type 'hello' in the search field
//!  ^    ^       ^      ^
//!  |    object  prep   object2      (subject defaults to "user")
//!  action
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gui::Action;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2RStep {
    pub subject: String,
    pub action: Action,
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preposition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object2: Option<String>,
}

impl S2RStep {
    /// Slots joined back into a sentence, in slot order.
    pub fn render(&self) -> String {
        let mut parts = vec![self.subject.as_str(), self.action.as_str()];
        if !self.object.is_empty() {
            parts.push(&self.object);
        }
        if let (Some(p), Some(o2)) = (&self.preposition, &self.object2) {
            parts.push(p);
            parts.push(o2);
        }
        parts.join(" ")
    }
}

pub(crate) const PREPOSITIONS: &[&str] = &["in", "on", "into", "from", "to", "at"];
pub(crate) const ARTICLES: &[&str] = &["a", "an", "the"];
const SUBJECT_FILLERS: &[&str] = &[
    "then", "next", "now", "first", "finally", "and", "please", "also", "again",
];

fn base_verb(word: &str) -> Option<Action> {
    Some(match word {
        "click" | "tap" | "press" => Action::Click,
        "type" | "enter" | "input" => Action::Type,
        "long-click" | "long-press" | "long-tap" | "longclick" | "longpress" => Action::LongClick,
        "swipe" | "scroll" => Action::Swipe,
        "pinch" => Action::Pinch,
        "open" | "launch" => Action::Open,
        "select" | "choose" | "pick" => Action::Select,
        _ => return None,
    })
}

/// Candidate base forms for an inflected verb (`taps`, `tapped`, `typing`).
fn lemmas(word: &str) -> Vec<String> {
    let mut out = vec![word.to_owned()];
    let undouble = |stem: &str| {
        let b = stem.as_bytes();
        (b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2]).then(|| stem[..stem.len() - 1].to_owned())
    };
    for suffix in ["ing", "ed"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            out.push(stem.to_owned());
            out.push(format!("{stem}e"));
            out.extend(undouble(stem));
        }
    }
    if let Some(stem) = word.strip_suffix("es") {
        out.push(stem.to_owned());
    }
    if let Some(stem) = word.strip_suffix('s') {
        out.push(stem.to_owned());
    }
    out
}

fn verb(word: &str, inflected: bool) -> Option<Action> {
    if !inflected {
        return base_verb(word);
    }
    lemmas(word).iter().find_map(|l| base_verb(l))
}

fn is_go(word: &str, inflected: bool) -> bool {
    matches!(word, "go" | "navigate")
        || (inflected
            && matches!(
                word,
                "goes" | "went" | "going" | "navigates" | "navigated" | "navigating"
            ))
}

/// Action named at the start of `words` (already lowercased and trimmed),
/// with the number of words it spans. Handles `long click`, `go back` and
/// `go to`.
pub(crate) fn leading_action(words: &[&str], base_only: bool) -> Option<(Action, usize)> {
    let inflected = !base_only;
    let first = *words.first()?;
    let second = words.get(1).copied();
    if first == "long" {
        if let Some(Action::Click) = second.and_then(|w| verb(w, inflected)) {
            return Some((Action::LongClick, 2));
        }
    }
    if is_go(first, inflected) {
        return match second {
            Some("back") => Some((Action::Back, 2)),
            Some("to") => Some((Action::Open, 2)),
            _ => None,
        };
    }
    verb(first, inflected).map(|a| (a, 1))
}

fn norm(tok: &str) -> String {
    tok.trim_matches(|c: char| !c.is_alphanumeric() && c != '-')
        .to_ascii_lowercase()
}

const QUOTES: &[char] = &['\'', '"', '\u{2018}', '\u{2019}', '\u{201c}', '\u{201d}'];

/// Tokens with quote-span tracking: `true` for tokens inside a quoted phrase.
fn quoted_flags(tokens: &[&str]) -> Vec<bool> {
    let mut flags = Vec::with_capacity(tokens.len());
    let mut open = false;
    for tok in tokens {
        let starts = tok.starts_with(QUOTES);
        let ends = tok.trim_end_matches([',', ';', ':']).ends_with(QUOTES);
        if open {
            flags.push(true);
            if ends {
                open = false;
            }
        } else if starts {
            flags.push(true);
            if !(ends && tok.chars().count() > 1) {
                open = true;
            }
        } else {
            flags.push(false);
        }
    }
    flags
}

fn join_slot(tokens: &[&str], quoted: &[bool]) -> String {
    tokens
        .iter()
        .zip(quoted)
        .filter(|(t, q)| **q || !ARTICLES.contains(&norm(t).as_str()))
        .map(|(t, q)| {
            if *q {
                (*t).to_owned()
            } else {
                t.trim_end_matches([',', ';', ':']).to_owned()
            }
        })
        .filter(|t| !t.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_s2r(sentence: &str) -> Result<S2RStep> {
    let cleaned = sentence.trim().trim_end_matches(['.', '!', '?', ';', ',', ':']);
    let tokens: Vec<&str> = cleaned.split_whitespace().collect();
    let norms: Vec<String> = tokens.iter().map(|t| norm(t)).collect();
    let norm_refs: Vec<&str> = norms.iter().map(String::as_str).collect();
    let quoted = quoted_flags(&tokens);

    let (verb_at, action, span) = (0..tokens.len())
        .filter(|&i| !quoted[i])
        .find_map(|i| leading_action(&norm_refs[i..], false).map(|(a, n)| (i, a, n)))
        .ok_or_else(|| Error::UnparseableStep {
            sentence: sentence.to_owned(),
        })?;

    let lead = norm_refs[..verb_at]
        .iter()
        .take_while(|w| SUBJECT_FILLERS.contains(w))
        .count();
    let subject = join_slot(&tokens[lead..verb_at], &quoted[lead..verb_at]);
    let subject = if subject.is_empty() { "user".to_owned() } else { subject };

    let mut rest = verb_at + span;
    // "Click on X": a particle right after the verb belongs to the verb.
    if norm_refs.get(rest) == Some(&"on") && !quoted[rest] && rest + 1 < tokens.len() {
        rest += 1;
    }
    let prep_at = (rest..tokens.len()).find(|&i| !quoted[i] && PREPOSITIONS.contains(&norm_refs[i]));
    let object_end = prep_at.unwrap_or(tokens.len());
    let object = join_slot(&tokens[rest..object_end], &quoted[rest..object_end]);

    let (preposition, object2) = match prep_at {
        Some(p) => {
            let o2 = join_slot(&tokens[p + 1..], &quoted[p + 1..]);
            if o2.is_empty() {
                (None, None)
            } else {
                (Some(norm_refs[p].to_owned()), Some(o2))
            }
        }
        None => (None, None),
    };

    Ok(S2RStep {
        subject,
        action,
        object,
        preposition,
        object2,
    })
}
