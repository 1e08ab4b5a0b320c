// SPDX-License-Identifier: Apache-2.0
//! Inverted index and the two lexical scorers.
//!
//! * BM25 with `idf = ln(1 + (N - df + 0.5) / (df + 0.5))` and the usual
//!   saturating, length-normalized term-frequency part.
//! * rVSM: cosine between log-tf * idf vectors (`idf = ln(N / df)`), scaled by
//!   `g(d) = 1 / (1 + exp(-norm_len(d)))`, where `norm_len` is the document
//!   length min-max normalized over the corpus.
//!
//! Query terms keep their multiplicity: a repeated BM25 query term
//! contributes once per occurrence, and rVSM uses `1 + ln(count)` as the
//! query-side term frequency.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::SourceDocument;
use crate::error::{Error, Result};
use crate::ranking::{Fallback, RankedList};
use crate::text::{PreprocessOptions, Preprocessor};

pub const INDEX_FORMAT: &str = "guiloc-index";
pub const INDEX_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoringParams {
    pub bm25_k1: f64,
    pub bm25_b: f64,
}

impl Default for ScoringParams {
    fn default() -> Self {
        Self {
            bm25_k1: 1.2,
            bm25_b: 0.75,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Posting {
    pub doc_id: u32,
    pub tf: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusIndex {
    pub documents: Vec<SourceDocument>,
    pub doc_count: u32,
    pub doc_freq: BTreeMap<String, u32>,
    pub postings: BTreeMap<String, Vec<Posting>>,
    pub avg_length: f64,
    pub params: ScoringParams,
    pub preprocess: PreprocessOptions,
    #[serde(skip)]
    derived: Derived,
}

/// Per-document quantities for rVSM, recomputed on build and on load.
#[derive(Debug, Clone, Default)]
struct Derived {
    vector_norms: Vec<f64>,
    length_factor: Vec<f64>,
}

impl PartialEq for CorpusIndex {
    fn eq(&self, other: &Self) -> bool {
        self.documents == other.documents
            && self.doc_count == other.doc_count
            && self.doc_freq == other.doc_freq
            && self.postings == other.postings
            && self.avg_length.to_bits() == other.avg_length.to_bits()
            && self.params == other.params
            && self.preprocess == other.preprocess
    }
}

#[derive(Serialize)]
struct IndexFileRef<'a> {
    format: &'a str,
    version: u32,
    index: &'a CorpusIndex,
}

#[derive(Deserialize)]
struct IndexFile {
    format: String,
    version: u32,
    index: CorpusIndex,
}

impl CorpusIndex {
    pub fn build(documents: Vec<SourceDocument>, params: ScoringParams, preprocess: PreprocessOptions) -> Result<Self> {
        if documents.is_empty() {
            return Err(Error::Input("cannot index an empty corpus".into()));
        }
        for (i, d) in documents.iter().enumerate() {
            if d.doc_id as usize != i {
                return Err(Error::Input(format!(
                    "document {} has id {}, expected {i}",
                    d.path, d.doc_id
                )));
            }
        }
        let mut postings: BTreeMap<String, Vec<Posting>> = BTreeMap::new();
        for d in &documents {
            for (term, &tf) in &d.terms {
                postings
                    .entry(term.clone())
                    .or_default()
                    .push(Posting { doc_id: d.doc_id, tf });
            }
        }
        let doc_freq = postings.iter().map(|(t, p)| (t.clone(), p.len() as u32)).collect();
        let total: u64 = documents.iter().map(|d| d.length as u64).sum();
        let doc_count = documents.len() as u32;
        let mut index = Self {
            avg_length: total as f64 / doc_count as f64,
            documents,
            doc_count,
            doc_freq,
            postings,
            params,
            preprocess,
            derived: Derived::default(),
        };
        index.derive();
        Ok(index)
    }

    fn derive(&mut self) {
        let n = self.doc_count as f64;
        let mut sq = vec![0.0f64; self.documents.len()];
        for (term, plist) in &self.postings {
            let idf = (n / self.doc_freq[term] as f64).ln();
            for p in plist {
                let w = (1.0 + (p.tf as f64).ln()) * idf;
                sq[p.doc_id as usize] += w * w;
            }
        }
        let lens = self.documents.iter().map(|d| d.length);
        let min = lens.clone().min().unwrap_or(0) as f64;
        let max = lens.max().unwrap_or(0) as f64;
        self.derived = Derived {
            vector_norms: sq.into_iter().map(f64::sqrt).collect(),
            length_factor: self
                .documents
                .iter()
                .map(|d| {
                    let norm_len = if max > min {
                        (d.length as f64 - min) / (max - min)
                    } else {
                        0.0
                    };
                    1.0 / (1.0 + (-norm_len).exp())
                })
                .collect(),
        };
    }

    /// Preprocessor configured exactly like the one that built the documents.
    pub fn preprocessor(&self) -> Preprocessor {
        Preprocessor::new(self.preprocess.clone())
    }

    pub fn paths(&self) -> impl Iterator<Item = &str> {
        self.documents.iter().map(|d| d.path.as_str())
    }

    pub fn contains_path(&self, path: &str) -> bool {
        self.documents.iter().any(|d| d.path == path)
    }

    pub fn score_bm25(&self, query: &[String]) -> RankedList {
        if query.is_empty() {
            return empty_query();
        }
        let stats = self.bm25_stats();
        let mut scores = vec![0.0f64; self.documents.len()];
        for (term, count) in multiplicities(query) {
            let Some(plist) = self.postings.get(term) else {
                continue;
            };
            let idf = stats.idf(self.doc_freq[term]);
            for p in plist {
                let len = self.documents[p.doc_id as usize].length;
                scores[p.doc_id as usize] += count as f64 * idf * stats.tf_part(p.tf, len);
            }
        }
        self.collect(scores, query)
    }

    pub fn score_rvsm(&self, query: &[String]) -> RankedList {
        if query.is_empty() {
            return empty_query();
        }
        let n = self.doc_count as f64;
        let mut dot = vec![0.0f64; self.documents.len()];
        let mut query_sq = 0.0;
        for (term, count) in multiplicities(query) {
            let Some(plist) = self.postings.get(term) else {
                continue;
            };
            let idf = (n / self.doc_freq[term] as f64).ln();
            let qw = (1.0 + (count as f64).ln()) * idf;
            query_sq += qw * qw;
            for p in plist {
                dot[p.doc_id as usize] += qw * (1.0 + (p.tf as f64).ln()) * idf;
            }
        }
        let query_norm = query_sq.sqrt();
        let scores = dot
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                let norm = self.derived.vector_norms[i];
                if d <= 0.0 || norm == 0.0 || query_norm == 0.0 {
                    0.0
                } else {
                    self.derived.length_factor[i] * d / (query_norm * norm)
                }
            })
            .collect();
        self.collect(scores, query)
    }

    pub fn rank(&self, query: &[String], scorer: Scorer) -> RankedList {
        match scorer {
            Scorer::Bm25 => self.score_bm25(query),
            Scorer::Rvsm => self.score_rvsm(query),
        }
    }

    /// Corpus-level BM25 statistics, detachable from the index so documents
    /// can be scored against a fixed snapshot.
    pub fn bm25_stats(&self) -> Bm25Stats {
        Bm25Stats {
            doc_count: self.doc_count,
            avg_length: self.avg_length,
            params: self.params,
        }
    }

    fn collect(&self, scores: Vec<f64>, query: &[String]) -> RankedList {
        RankedList::from_scores(
            self.documents.iter().zip(scores).map(|(d, s)| (d.path.clone(), s)),
            query,
        )
    }

    fn check(&self) -> Result<()> {
        if self.documents.is_empty() || self.doc_count as usize != self.documents.len() {
            return Err(Error::Input("index document count mismatch".into()));
        }
        if self.doc_freq.len() != self.postings.len() {
            return Err(Error::Input("index vocabulary mismatch".into()));
        }
        for (term, plist) in &self.postings {
            let df = self.doc_freq.get(term).copied().unwrap_or(0);
            if df as usize != plist.len() || df == 0 || df > self.doc_count {
                return Err(Error::Input(format!("inconsistent postings for term {term:?}")));
            }
            if plist.iter().any(|p| p.doc_id >= self.doc_count) {
                return Err(Error::Input(format!("dangling posting for term {term:?}")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = IndexFileRef {
            format: INDEX_FORMAT,
            version: INDEX_VERSION,
            index: self,
        };
        serde_json::to_string(&file).expect("index serializes")
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        let file: IndexFile = serde_json::from_str(raw).map_err(|e| Error::json("index", &e))?;
        if file.format != INDEX_FORMAT {
            return Err(Error::Input(format!("not an index file (format {:?})", file.format)));
        }
        if file.version != INDEX_VERSION {
            return Err(Error::Version {
                what: "index",
                found: file.version,
                expected: INDEX_VERSION,
            });
        }
        let mut index = file.index;
        index.check()?;
        index.derive();
        Ok(index)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&raw)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bm25Stats {
    pub doc_count: u32,
    pub avg_length: f64,
    pub params: ScoringParams,
}

impl Bm25Stats {
    pub fn idf(&self, df: u32) -> f64 {
        let n = self.doc_count as f64;
        let df = df as f64;
        (1.0 + (n - df + 0.5) / (df + 0.5)).ln()
    }

    pub fn tf_part(&self, tf: u32, doc_len: u32) -> f64 {
        let ScoringParams { bm25_k1: k1, bm25_b: b } = self.params;
        let f = tf as f64;
        let norm = if self.avg_length > 0.0 {
            doc_len as f64 / self.avg_length
        } else {
            0.0
        };
        f * (k1 + 1.0) / (f + k1 * (1.0 - b + b * norm))
    }

    /// BM25 score of one document given document frequencies from the
    /// snapshot's corpus.
    pub fn score_document(&self, doc: &SourceDocument, query: &[String], doc_freq: &BTreeMap<String, u32>) -> f64 {
        multiplicities(query)
            .into_iter()
            .filter_map(|(t, count)| {
                let tf = *doc.terms.get(t)?;
                let df = *doc_freq.get(t)?;
                Some(count as f64 * self.idf(df) * self.tf_part(tf, doc.length))
            })
            .sum()
    }
}

fn multiplicities(query: &[String]) -> BTreeMap<&str, u32> {
    let mut m = BTreeMap::new();
    for t in query {
        *m.entry(t.as_str()).or_default() += 1;
    }
    m
}

fn empty_query() -> RankedList {
    RankedList {
        fallbacks: BTreeSet::from([Fallback::EmptyQuery]),
        ..RankedList::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scorer {
    Bm25,
    Rvsm,
}

impl Scorer {
    pub const ALL: [Scorer; 2] = [Scorer::Bm25, Scorer::Rvsm];

    pub fn as_str(self) -> &'static str {
        match self {
            Scorer::Bm25 => "bm25",
            Scorer::Rvsm => "rvsm",
        }
    }
}

impl fmt::Display for Scorer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scorer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bm25" => Ok(Scorer::Bm25),
            "rvsm" => Ok(Scorer::Rvsm),
            other => Err(Error::Config(format!(
                "unknown scorer {other:?}; valid options: bm25, rvsm"
            ))),
        }
    }
}
