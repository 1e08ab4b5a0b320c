// SPDX-License-Identifier: Apache-2.0
//! Term normalization shared by indexing, GUI term extraction and queries.
//!
//! Identifiers are split on non-alphanumeric characters, camelCase humps and
//! letter/digit boundaries, then lowercased and filtered. Only ASCII
//! alphanumerics survive; anything else acts as a separator.

use std::collections::BTreeSet;
use std::path::Path;

use rust_stemmers::{Algorithm, Stemmer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ENGLISH_STOPWORDS: &str = include_str!("../data/stopwords_en.txt");
const CODE_STOPWORDS: &str = include_str!("../data/stopwords_code.txt");

pub const DEFAULT_MIN_TERM_LEN: usize = 2;

/// Knobs controlling [`Preprocessor`]. Stored inside serialized indexes so
/// queries are normalized exactly like the documents they are scored against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreprocessOptions {
    pub min_term_len: usize,
    pub stemming: bool,
    pub stopwords: BTreeSet<String>,
}

impl Default for PreprocessOptions {
    fn default() -> Self {
        Self {
            min_term_len: DEFAULT_MIN_TERM_LEN,
            stemming: false,
            stopwords: default_stopwords(),
        }
    }
}

/// English stopwords plus Java/Kotlin keywords.
pub fn default_stopwords() -> BTreeSet<String> {
    parse_word_list(ENGLISH_STOPWORDS)
        .chain(parse_word_list(CODE_STOPWORDS))
        .collect()
}

/// Reads a stopword file: one term per line, `#` starts a comment.
pub fn load_stopwords(path: &Path) -> Result<BTreeSet<String>> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(parse_word_list(&raw).collect())
}

fn parse_word_list(raw: &str) -> impl Iterator<Item = String> + '_ {
    raw.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_ascii_lowercase)
}

pub struct Preprocessor {
    options: PreprocessOptions,
    stemmer: Option<Stemmer>,
}

impl std::fmt::Debug for Preprocessor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Preprocessor").field("options", &self.options).finish()
    }
}

impl Default for Preprocessor {
    fn default() -> Self {
        Self::new(PreprocessOptions::default())
    }
}

impl Clone for Preprocessor {
    fn clone(&self) -> Self {
        Self::new(self.options.clone())
    }
}

impl Preprocessor {
    pub fn new(options: PreprocessOptions) -> Self {
        let stemmer = options.stemming.then(|| Stemmer::create(Algorithm::English));
        Self { options, stemmer }
    }

    pub fn options(&self) -> &PreprocessOptions {
        &self.options
    }

    /// Normalizes free text or source code into a list of index terms, in
    /// order of appearance.
    pub fn preprocess(&self, text: &str) -> Vec<String> {
        let min = self.options.min_term_len;
        let mut out = Vec::new();
        for piece in split_identifiers(text) {
            if piece.len() < min || self.options.stopwords.contains(&piece) {
                continue;
            }
            let term = match &self.stemmer {
                Some(stemmer) => stemmer.stem(&piece).into_owned(),
                None => piece,
            };
            if term.len() >= min {
                out.push(term);
            }
        }
        out
    }
}

/// Splits text into lowercase subwords without any filtering.
///
/// `getUserName` -> `get user name`, `HTTPServer2` -> `http server 2`,
/// `menu_settings` -> `menu settings`.
pub fn split_identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split(|c: char| !c.is_ascii_alphanumeric()) {
        if chunk.is_empty() {
            continue;
        }
        let bytes = chunk.as_bytes();
        let mut start = 0;
        for i in 1..bytes.len() {
            let prev = bytes[i - 1];
            let cur = bytes[i];
            let next = bytes.get(i + 1).copied();
            let boundary = (prev.is_ascii_lowercase() && cur.is_ascii_uppercase())
                || (prev.is_ascii_digit() != cur.is_ascii_digit())
                || (prev.is_ascii_uppercase()
                    && cur.is_ascii_uppercase()
                    && next.is_some_and(|n| n.is_ascii_lowercase()));
            if boundary {
                out.push(chunk[start..i].to_ascii_lowercase());
                start = i;
            }
        }
        out.push(chunk[start..].to_ascii_lowercase());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pp(text: &str) -> Vec<String> {
        Preprocessor::default().preprocess(text)
    }

    #[test]
    fn camel_case_is_split() {
        assert_eq!(pp("getUserName"), ["get", "user", "name"]);
    }

    #[test]
    fn resource_reference_drops_short_prefix() {
        assert_eq!(pp("R.id.menu_settings"), ["id", "menu", "settings"]);
    }

    #[test]
    fn stopwords_only_yields_nothing() {
        assert!(pp("the THE The").is_empty());
        assert!(pp("").is_empty());
    }

    #[test]
    fn acronyms_and_digits() {
        assert_eq!(split_identifiers("HTTPServer2x"), ["http", "server", "2", "x"]);
        assert_eq!(pp("parseHTMLFile v10"), ["parse", "html", "file", "10"]);
    }

    #[test]
    fn java_keywords_are_dropped() {
        assert_eq!(
            pp("public static void saveNote(Note note) { return; }"),
            ["save", "note", "note", "note"]
        );
    }

    #[test]
    fn stemming_is_opt_in() {
        let stem = Preprocessor::new(PreprocessOptions {
            stemming: true,
            ..Default::default()
        });
        assert_eq!(stem.preprocess("saving notes"), ["save", "note"]);
        assert_eq!(pp("saving notes"), ["saving", "notes"]);
    }

    #[test]
    fn min_length_is_configurable() {
        let p = Preprocessor::new(PreprocessOptions {
            min_term_len: 4,
            ..Default::default()
        });
        assert_eq!(p.preprocess("tap the save button"), ["save", "button"]);
    }

    #[test]
    fn stopword_file_parsing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stop.txt");
        std::fs::write(&path, "Foo\n# comment\n\nbar  # trailing\n").unwrap();
        let words = load_stopwords(&path).unwrap();
        assert_eq!(words.into_iter().collect::<Vec<_>>(), ["bar", "foo"]);
    }

    proptest! {
        #[test]
        fn output_terms_are_lowercase_alnum_and_long_enough(text in "\\PC{0,80}") {
            for term in pp(&text) {
                prop_assert!(term.len() >= DEFAULT_MIN_TERM_LEN);
                prop_assert!(term.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit()));
            }
        }

        #[test]
        fn preprocess_is_idempotent(text in "[a-zA-Z0-9_ .()]{0,80}") {
            let once = pp(&text);
            let twice = pp(&once.join(" "));
            prop_assert_eq!(once, twice);
        }
    }
}
