//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! vertex a
//! vertex b
//! edge a b
//! ```
//!
//! Names match `[A-Za-z0-9_]+`, vertices are declared before use, and each
//! `edge` line asserts an infinite edge bundle. Repeated edge lines are
//! harmless.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{is_token, AmplifiedGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),
    #[error("duplicate vertex declaration `{0}`")]
    DuplicateVertex(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

pub fn parse_graph(text: &str) -> Result<AmplifiedGraph, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut index = std::collections::HashMap::new();

    for (lineno, raw) in text.split('\n').enumerate() {
        let line = lineno + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let mut fields = trimmed.split_ascii_whitespace();
        let keyword = fields.next().unwrap_or_default();
        let args: Vec<&str> = fields.collect();
        for a in &args {
            if !is_token(a) {
                return Err(err(ParseErrorKind::Syntax(format!("invalid name `{a}`"))));
            }
        }
        match (keyword, args.as_slice()) {
            ("vertex", [name]) => {
                if index.contains_key(*name) {
                    return Err(err(ParseErrorKind::DuplicateVertex((*name).to_owned())));
                }
                index.insert((*name).to_owned(), names.len());
                names.push((*name).to_owned());
            }
            ("edge", [src, dst]) => {
                let lookup = |n: &str| {
                    index
                        .get(n)
                        .copied()
                        .ok_or_else(|| err(ParseErrorKind::UndeclaredVertex(n.to_owned())))
                };
                edges.push((lookup(src)?, lookup(dst)?));
            }
            ("vertex", _) => {
                return Err(err(ParseErrorKind::Syntax(
                    "expected `vertex <name>`".to_owned(),
                )))
            }
            ("edge", _) => {
                return Err(err(ParseErrorKind::Syntax(
                    "expected `edge <src> <dst>`".to_owned(),
                )))
            }
            (other, _) => {
                return Err(err(ParseErrorKind::Syntax(format!(
                    "unknown directive `{other}`"
                ))))
            }
        }
    }

    let mut graph = AmplifiedGraph::new(names).expect("names validated while parsing");
    for (s, t) in edges {
        graph.add_edge(VertexId(s), VertexId(t));
    }
    Ok(graph)
}

/// Serializes vertices in index order, then edges row-major.
pub fn write_graph(graph: &AmplifiedGraph) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        writeln!(out, "vertex {}", graph.name(v)).unwrap();
    }
    for (v, w) in graph.edges() {
        writeln!(out, "edge {} {}", graph.name(v), graph.name(w)).unwrap();
    }
    out
}
