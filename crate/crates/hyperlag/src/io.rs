//! Graph and weighting files.
//!
//! Graph text format:
//!
//! ```text
//! # K_3^{1,2}
//! n 3
//! 1
//! 2
//! 3
//! 1 2
//! 1 3
//! 2 3
//! ```
//!
//! The first non-comment line is the header `n <count>`; each further line is
//! one edge given as increasing labels. Blank lines and lines starting with `#`
//! are skipped. The JSON mirror is `{"n": 3, "edges": [[1], [1, 2], ...]}`.
//!
//! Weighting files hold one real per line, or a JSON array of numbers.

use std::fs;
use std::path::Path;

use hyperlag_core::Hypergraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl FormatError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Line {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{path}: {source}")]
pub struct InputError {
    pub path: String,
    #[source]
    pub source: InputErrorKind,
}

#[derive(Debug, thiserror::Error)]
pub enum InputErrorKind {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// JSON shape of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl GraphDoc {
    pub fn from_graph(h: &Hypergraph) -> Self {
        GraphDoc {
            n: h.n(),
            edges: h.edges().map(|e| e.to_vec()).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Hypergraph, FormatError> {
        for (k, e) in self.edges.iter().enumerate() {
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(FormatError::Invalid(format!(
                    "edge {} ({e:?}) is not strictly increasing",
                    k + 1
                )));
            }
        }
        Hypergraph::build(self.n, &self.edges).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

fn looks_like_json(text: &str, open: char) -> bool {
    text.trim_start().starts_with(open)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses either format, chosen by whether the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<Hypergraph, FormatError> {
    if looks_like_json(text, '{') {
        serde_json::from_str::<GraphDoc>(text)?.to_graph()
    } else {
        parse_graph_text(text)
    }
}

pub fn parse_graph_text(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| FormatError::Invalid("missing header `n <count>`".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| FormatError::at(header_line, format!("bad vertex count `{count}`")))?,
        _ => return Err(FormatError::at(header_line, "expected header `n <count>`")),
    };
    let mut edges = Vec::new();
    let mut line_of = Vec::new();
    for (line, body) in lines {
        let labels = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| FormatError::at(line, format!("bad vertex label `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError::at(line, "labels must be strictly increasing"));
        }
        if let Some(&bad) = labels.iter().find(|&&v| v == 0 || v > n) {
            return Err(FormatError::at(
                line,
                format!("label {bad} outside 1..={n}"),
            ));
        }
        edges.push(labels);
        line_of.push(line);
    }
    // duplicates and oversized edges point at their line; anything else at the header
    Hypergraph::build(n, &edges).map_err(|err| {
        let line = match &err {
            hyperlag_core::Error::DuplicateEdge(e) => {
                edges.iter().rposition(|x| x == e).map(|k| line_of[k])
            }
            hyperlag_core::Error::ArityTooLarge { r, .. } => {
                edges.iter().position(|x| x.len() == *r).map(|k| line_of[k])
            }
            _ => None,
        };
        match line {
            Some(line) => FormatError::at(line, err.to_string()),
            None => FormatError::at(header_line, err.to_string()),
        }
    })
}

pub fn graph_to_text(h: &Hypergraph) -> String {
    let mut out = format!("n {}\n", h.n());
    for e in h.edges() {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

pub fn graph_to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&GraphDoc::from_graph(h)).expect("plain data")
}

/// Raw weights, either one per line or a JSON array. Normalization and
/// feasibility checks are left to [`hyperlag_core::Weighting`].
pub fn parse_weighting(text: &str) -> Result<Vec<f64>, FormatError> {
    if looks_like_json(text, '[') {
        return Ok(serde_json::from_str(text)?);
    }
    content_lines(text)
        .map(|(line, body)| {
            body.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| FormatError::at(line, format!("bad weight `{body}`")))
        })
        .collect()
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError {
        path: path.display().to_string(),
        source: e.into(),
    })
}

pub fn read_graph(path: &Path) -> Result<Hypergraph, InputError> {
    parse_graph(&read(path)?).map_err(|e| InputError {
        path: path.display().to_string(),
        source: e.into(),
    })
}

pub fn read_weighting(path: &Path) -> Result<Vec<f64>, InputError> {
    parse_weighting(&read(path)?).map_err(|e| InputError {
        path: path.display().to_string(),
        source: e.into(),
    })
}
