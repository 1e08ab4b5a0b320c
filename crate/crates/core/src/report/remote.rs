// SPDX-License-Identifier: Apache-2.0
//! Sentence classifier backed by a remote text-generation service.
//!
//! Wire format (`guiloc.classify/v1`), one POST per report:
//!
//! ```json
//! // request
//! {"schema": "guiloc.classify/v1", "model": "<name>", "sentences": ["...", "..."]}
//! // response
//! {"schema": "guiloc.classify/v1", "tags": ["S2R", "OB"]}
//! ```
//!
//! Tags are `OB`, `EB`, `S2R` or `OTHER`, one per sentence in request order.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::classify::{ClassifierError, Sentence, SentenceClassifier, Tag};

pub const CLASSIFY_SCHEMA: &str = "guiloc.classify/v1";

pub const ENV_URL: &str = "GUILOC_CLASSIFIER_URL";
pub const ENV_MODEL: &str = "GUILOC_CLASSIFIER_MODEL";
pub const ENV_TIMEOUT_MS: &str = "GUILOC_CLASSIFIER_TIMEOUT_MS";

#[derive(Serialize)]
struct Request<'a> {
    schema: &'a str,
    model: &'a str,
    sentences: Vec<&'a str>,
}

#[derive(Deserialize)]
struct Response {
    schema: String,
    tags: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RemoteClassifier {
    endpoint: String,
    model: String,
    agent: ureq::Agent,
}

impl RemoteClassifier {
    pub fn new(endpoint: impl Into<String>, model: impl Into<String>, timeout: Duration) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .build()
            .into();
        Self {
            endpoint: endpoint.into(),
            model: model.into(),
            agent,
        }
    }

    /// Configured from `GUILOC_CLASSIFIER_URL`, `GUILOC_CLASSIFIER_MODEL` and
    /// `GUILOC_CLASSIFIER_TIMEOUT_MS` (default 10 s). `None` when no URL is set.
    pub fn from_env() -> Option<Self> {
        let url = std::env::var(ENV_URL).ok().filter(|u| !u.trim().is_empty())?;
        let model = std::env::var(ENV_MODEL).unwrap_or_else(|_| "default".into());
        let timeout = std::env::var(ENV_TIMEOUT_MS)
            .ok()
            .and_then(|t| t.parse().ok())
            .map(Duration::from_millis)
            .unwrap_or(Duration::from_secs(10));
        Some(Self::new(url, model, timeout))
    }
}

impl SentenceClassifier for RemoteClassifier {
    fn name(&self) -> &str {
        "remote"
    }

    fn classify(&self, sentences: &[Sentence]) -> Result<Vec<Tag>, ClassifierError> {
        let body = Request {
            schema: CLASSIFY_SCHEMA,
            model: &self.model,
            sentences: sentences.iter().map(|s| s.text.as_str()).collect(),
        };
        let err = |e: ureq::Error| ClassifierError(e.to_string());
        let resp: Response = self
            .agent
            .post(&self.endpoint)
            .send_json(&body)
            .map_err(err)?
            .into_body()
            .read_json()
            .map_err(err)?;
        if resp.schema != CLASSIFY_SCHEMA {
            return Err(ClassifierError(format!("unexpected schema {:?}", resp.schema)));
        }
        resp.tags
            .iter()
            .map(|t| Tag::parse(t).ok_or_else(|| ClassifierError(format!("unknown tag {t:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{classify_sentences, segment_sentences};
    use std::io::{BufRead, BufReader, Read, Write};
    use std::net::TcpListener;
    use std::thread;

    /// Serves one request with `reply` after `delay`, returning the request body.
    fn serve_once(reply: &'static str, delay: Duration) -> (String, thread::JoinHandle<String>) {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let url = format!("http://{}/classify", listener.local_addr().unwrap());
        let handle = thread::spawn(move || {
            let (mut stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut len = 0usize;
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                if line == "\r\n" || line.is_empty() {
                    break;
                }
                if let Some(v) = line.to_ascii_lowercase().strip_prefix("content-length:") {
                    len = v.trim().parse().unwrap();
                }
            }
            let mut body = vec![0; len];
            reader.read_exact(&mut body).unwrap();
            thread::sleep(delay);
            let resp = format!(
                "HTTP/1.1 200 OK\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{reply}",
                reply.len()
            );
            let _ = stream.write_all(resp.as_bytes());
            String::from_utf8(body).unwrap()
        });
        (url, handle)
    }

    #[test]
    fn wire_round_trip() {
        let (url, server) = serve_once(r#"{"schema":"guiloc.classify/v1","tags":["EB","ob"]}"#, Duration::ZERO);
        let port = RemoteClassifier::new(url, "m1", Duration::from_secs(5));
        let out = classify_sentences(&segment_sentences("Tap save. It crashes."), &port);
        assert_eq!(out.classifier, "remote");
        assert!(out.warnings.is_empty());
        assert_eq!(
            out.sentences.iter().map(|s| s.tag).collect::<Vec<_>>(),
            [Tag::Eb, Tag::Ob]
        );
        let sent: serde_json::Value = serde_json::from_str(&server.join().unwrap()).unwrap();
        assert_eq!(
            sent,
            serde_json::json!({"schema": CLASSIFY_SCHEMA, "model": "m1", "sentences": ["Tap save.", "It crashes."]})
        );
    }

    #[test]
    fn timeout_falls_back_to_heuristic() {
        let (url, _server) = serve_once(
            r#"{"schema":"guiloc.classify/v1","tags":["OB"]}"#,
            Duration::from_millis(1500),
        );
        let port = RemoteClassifier::new(url, "m", Duration::from_millis(200));
        let out = classify_sentences(&segment_sentences("Tap save."), &port);
        assert_eq!(out.classifier, "heuristic");
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.sentences[0].tag, Tag::S2R);
    }

    #[test]
    fn malformed_reply_falls_back() {
        let (url, server) = serve_once(r#"{"schema":"other","tags":["OB"]}"#, Duration::ZERO);
        let port = RemoteClassifier::new(url, "m", Duration::from_secs(5));
        let out = classify_sentences(&segment_sentences("Tap save."), &port);
        assert_eq!(out.classifier, "heuristic");
        server.join().unwrap();
    }
}
