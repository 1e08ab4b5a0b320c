// SPDX-License-Identifier: Apache-2.0
//! Source tree scanning and per-file term bags.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::text::Preprocessor;

/// Term multiset: term -> occurrence count.
pub type TermBag = BTreeMap<String, u32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceDocument {
    pub doc_id: u32,
    /// Relative path with `/` separators.
    pub path: String,
    pub class_name: String,
    pub terms: TermBag,
    pub length: u32,
    pub resource_id_refs: BTreeSet<String>,
}

impl SourceDocument {
    /// Builds a document from raw file text. `known_ids` seeds the exact-token
    /// resource-id match (see [`extract_code_facets`]).
    pub fn from_text(
        doc_id: u32,
        path: &str,
        raw: &str,
        pre: &Preprocessor,
        known_ids: &BTreeSet<String>,
    ) -> Result<Self> {
        let facets = extract_code_facets(raw, path, known_ids);
        if facets.class_name.is_empty() {
            return Err(Error::Input(format!("{path}: empty class name")));
        }
        let mut terms = TermBag::new();
        for t in pre.preprocess(raw) {
            *terms.entry(t).or_default() += 1;
        }
        let length = terms.values().sum();
        Ok(Self {
            doc_id,
            path: path.to_owned(),
            class_name: facets.class_name,
            terms,
            length,
            resource_id_refs: facets.resource_id_refs,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFacets {
    pub class_name: String,
    pub resource_id_refs: BTreeSet<String>,
}

static RESOURCE_REF: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\bR\s*\.\s*id\s*\.\s*([A-Za-z_][A-Za-z0-9_]*)").unwrap());
static ID_LIKE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"[A-Za-z0-9_]{2,}").unwrap());

/// Lexical facets used by the GUI mapping strategies.
///
/// `resource_id_refs` holds every `R.id.<name>` reference plus any
/// identifier or quoted string that is exactly equal to one of `known_ids`
/// (ids harvested from reproduction traces). All refs are lowercased.
pub fn extract_code_facets(raw: &str, path: &str, known_ids: &BTreeSet<String>) -> CodeFacets {
    let mut refs: BTreeSet<String> = RESOURCE_REF
        .captures_iter(raw)
        .map(|c| c[1].to_ascii_lowercase())
        .collect();
    if !known_ids.is_empty() {
        // Quoted strings of id shape are covered too: the quotes are not
        // part of the token class, so the inner token is matched as-is.
        refs.extend(
            ID_LIKE
                .find_iter(raw)
                .map(|m| m.as_str())
                .filter(|tok| known_ids.contains(*tok))
                .map(str::to_ascii_lowercase),
        );
    }
    CodeFacets {
        class_name: class_name_of(path),
        resource_id_refs: refs,
    }
}

/// File basename without its extension.
pub fn class_name_of(path: &str) -> String {
    let base = path.rsplit(['/', '\\']).next().unwrap_or(path);
    match base.rfind('.') {
        Some(0) | None => base.to_owned(),
        Some(i) => base[..i].to_owned(),
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub extensions: BTreeSet<String>,
    pub known_ids: BTreeSet<String>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            extensions: BTreeSet::from(["java".to_owned()]),
            known_ids: BTreeSet::new(),
        }
    }
}

#[derive(Debug, Default)]
pub struct ScanOutcome {
    pub documents: Vec<SourceDocument>,
    /// Files that matched the extension filter but could not be indexed.
    pub warnings: Vec<String>,
}

/// Walks `root` and builds one document per file whose extension is in
/// `options.extensions`. Documents are ordered by relative path and numbered
/// from 0 in that order.
pub fn scan_corpus(root: &Path, pre: &Preprocessor, options: &ScanOptions) -> Result<ScanOutcome> {
    if options.extensions.is_empty() {
        return Err(Error::Config("no file extensions selected".into()));
    }
    let meta = std::fs::metadata(root).map_err(|e| Error::io(root, e))?;
    if !meta.is_dir() {
        return Err(Error::Input(format!("{} is not a directory", root.display())));
    }

    let mut warnings = Vec::new();
    let mut files: Vec<(String, PathBuf)> = Vec::new();
    for entry in WalkDir::new(root).follow_links(false) {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                if e.depth() == 0 {
                    return Err(Error::Input(format!("cannot read {}: {e}", root.display())));
                }
                warnings.push(e.to_string());
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let ext = entry.path().extension().and_then(|e| e.to_str());
        if !ext.is_some_and(|e| options.extensions.contains(e)) {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .unwrap_or(entry.path())
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        files.push((rel, entry.into_path()));
    }
    files.sort();

    let loaded = read_all(&files);
    let mut documents = Vec::with_capacity(loaded.len());
    for ((rel, _), raw) in files.iter().zip(loaded) {
        let raw = match raw {
            Ok(r) => r,
            Err(e) => {
                warnings.push(format!("{rel}: {e}"));
                continue;
            }
        };
        let doc_id = documents.len() as u32;
        match SourceDocument::from_text(doc_id, rel, &raw, pre, &options.known_ids) {
            Ok(doc) => documents.push(doc),
            Err(e) => warnings.push(e.to_string()),
        }
    }
    for w in &warnings {
        log::warn!("skipped: {w}");
    }
    Ok(ScanOutcome { documents, warnings })
}

fn read_lossy(path: &Path) -> std::io::Result<String> {
    std::fs::read(path).map(|bytes| String::from_utf8_lossy(&bytes).into_owned())
}

#[cfg(feature = "parallel")]
fn read_all(files: &[(String, PathBuf)]) -> Vec<std::io::Result<String>> {
    use rayon::prelude::*;
    files.par_iter().map(|(_, p)| read_lossy(p)).collect()
}

#[cfg(not(feature = "parallel"))]
fn read_all(files: &[(String, PathBuf)]) -> Vec<std::io::Result<String>> {
    files.iter().map(|(_, p)| read_lossy(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn no_ids() -> BTreeSet<String> {
        BTreeSet::new()
    }

    #[test]
    fn extension_filter_and_order() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("B.java"), "class B {}").unwrap();
        fs::write(dir.path().join("A.java"), "class A {}").unwrap();
        fs::write(dir.path().join("C.kt"), "class C").unwrap();
        let out = scan_corpus(dir.path(), &Preprocessor::default(), &ScanOptions::default()).unwrap();
        let got: Vec<_> = out.documents.iter().map(|d| (d.doc_id, d.path.as_str())).collect();
        assert_eq!(got, [(0, "A.java"), (1, "B.java")]);
    }

    #[test]
    fn empty_directory() {
        let dir = tempfile::tempdir().unwrap();
        let out = scan_corpus(dir.path(), &Preprocessor::default(), &ScanOptions::default()).unwrap();
        assert!(out.documents.is_empty());
    }

    #[test]
    fn nested_path_and_class_name() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir(dir.path().join("x")).unwrap();
        fs::write(dir.path().join("x/A.java"), "class A {}").unwrap();
        let out = scan_corpus(dir.path(), &Preprocessor::default(), &ScanOptions::default()).unwrap();
        assert_eq!(out.documents.len(), 1);
        assert_eq!(out.documents[0].path, "x/A.java");
        assert_eq!(out.documents[0].class_name, "A");
    }

    #[test]
    fn missing_root_is_fatal() {
        let err = scan_corpus(
            Path::new("/definitely/not/here"),
            &Preprocessor::default(),
            &ScanOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn invalid_utf8_is_decoded_lossily() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("A.java"), b"save\xff\xfeButton").unwrap();
        let out = scan_corpus(dir.path(), &Preprocessor::default(), &ScanOptions::default()).unwrap();
        let terms: Vec<_> = out.documents[0].terms.keys().cloned().collect();
        assert_eq!(terms, ["button", "save"]);
    }

    #[test]
    fn length_matches_multiplicities() {
        let doc = SourceDocument::from_text(
            0,
            "Foo.java",
            "saveNote saveNote deleteNote",
            &Preprocessor::default(),
            &no_ids(),
        )
        .unwrap();
        assert_eq!(doc.length, 6);
        assert_eq!(doc.terms["note"], 3);
        assert_eq!(doc.length, doc.terms.values().sum::<u32>());
    }

    #[test]
    fn facets_from_resource_reference() {
        let f = extract_code_facets("btn = findViewById(R.id.save_button);", "a/Editor.java", &no_ids());
        assert_eq!(f.class_name, "Editor");
        assert_eq!(f.resource_id_refs, BTreeSet::from(["save_button".to_owned()]));
    }

    #[test]
    fn facets_without_references() {
        let f = extract_code_facets("int x = 1;", "Util.java", &no_ids());
        assert_eq!(f.class_name, "Util");
        assert!(f.resource_id_refs.is_empty());
    }

    #[test]
    fn facets_lowercase_each_match() {
        let f = extract_code_facets("R.id.saveButton ... R.id.save_button", "E.java", &no_ids());
        assert_eq!(
            f.resource_id_refs,
            BTreeSet::from(["savebutton".to_owned(), "save_button".to_owned()])
        );
    }

    #[test]
    fn facets_match_known_ids_exactly() {
        let known = BTreeSet::from(["fab_add".to_owned(), "toolbar".to_owned()]);
        let f = extract_code_facets(
            r#"bind("fab_add"); View toolbarView = find(toolbar); fab_added();"#,
            "M.java",
            &known,
        );
        assert_eq!(
            f.resource_id_refs,
            BTreeSet::from(["fab_add".to_owned(), "toolbar".to_owned()])
        );
    }

    #[test]
    fn class_name_rules() {
        assert_eq!(class_name_of("x/y/Settings.java"), "Settings");
        assert_eq!(class_name_of("Plain"), "Plain");
        assert_eq!(class_name_of("a.b.Kt.kt"), "a.b.Kt");
    }

    #[test]
    fn scanning_is_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        for (name, body) in [("Z.java", "R.id.zed"), ("m/M.java", "mmm R.id.em"), ("A.java", "aa")] {
            let p = dir.path().join(name);
            fs::create_dir_all(p.parent().unwrap()).unwrap();
            fs::write(p, body).unwrap();
        }
        let pre = Preprocessor::default();
        let a = scan_corpus(dir.path(), &pre, &ScanOptions::default()).unwrap();
        let b = scan_corpus(dir.path(), &pre, &ScanOptions::default()).unwrap();
        assert_eq!(a.documents, b.documents);
        assert_eq!(
            a.documents.iter().map(|d| d.path.as_str()).collect::<Vec<_>>(),
            ["A.java", "Z.java", "m/M.java"]
        );
    }
}
