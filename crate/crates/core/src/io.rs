// SPDX-License-Identifier: Apache-2.0

//! Text formats: the canonical edge list, JSON and DOT export.
//!
//! Edge-list layout: a header line `n m`, then `m` lines `u v` with 0-based
//! ids. Anything from `#` to the end of a line is a comment; blank lines are
//! ignored. Writers emit arcs in lexicographic order with LF endings, so the
//! output is canonical and its digest is stable.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{Digraph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header announces {expected} arcs but {found} were listed")]
    ArcCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid JSON digraph: {0}")]
    Json(#[from] serde_json::Error),
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let field = fields.next().ok_or_else(|| ParseError::Syntax {
            line,
            message: format!("missing {what}"),
        })?;
        field.parse().map_err(|_| ParseError::Syntax {
            line,
            message: format!("{what} `{field}` is not a non-negative integer"),
        })
    };
    let pair = (next("first field")?, next("second field")?);
    if fields.next().is_some() {
        return Err(ParseError::Syntax {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    });
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header_line, header)?;
    let arcs = lines
        .map(|(line, content)| parse_pair(line, content))
        .collect::<Result<Vec<_>, _>>()?;
    if arcs.len() != m {
        return Err(ParseError::ArcCount {
            expected: m,
            found: arcs.len(),
        });
    }
    Ok(Digraph::new(n, arcs)?)
}

pub fn to_edge_list(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_json(d: &Digraph) -> String {
    serde_json::to_string(d).expect("digraph serialization is infallible")
}

pub fn parse_json(text: &str) -> Result<Digraph, ParseError> {
    Ok(serde_json::from_str(text)?)
}

/// Parses JSON when the first non-blank character is `{`, edge list otherwise.
pub fn parse_any(text: &str) -> Result<Digraph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in d.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

/// Arc table as CSV with a `tail,head` header.
pub fn to_arc_csv(d: &Digraph) -> String {
    let mut out = String::from("tail,head\n");
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u},{v}");
    }
    out
}

/// SHA-256 of the canonical edge list, hex encoded.
pub fn digest(d: &Digraph) -> String {
    hex::encode(Sha256::digest(to_edge_list(d).as_bytes()))
}
