//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4 3
//! 0 1
//! 0 2
//! 0 3
//! ```
//!
//! The header is `n m`; exactly `m` edge lines of 0-based `u v` follow.
//! Blank lines are skipped and the trailing newline is optional.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lapbound_core::Graph;

use crate::error::{HarnessError, ParseError};

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it
            .next()
            .ok_or_else(|| err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(line_no, format!("`{tok}` is not a non-negative integer")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(err(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(err(line_no, format!("more than the {m} declared edges")));
        }
        edges.push(two_numbers(line_no, line)?);
    }
    if edges.len() != m {
        return Err(err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|e| err(hline, e.to_string()))
}

pub fn read_edge_list(path: &Path) -> Result<Graph, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_edge_list(&text)?)
}

/// Canonical text: header, then edges in sorted order, newline-terminated.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_edge_list(path: &Path, g: &Graph) -> Result<(), HarnessError> {
    fs::write(path, to_edge_list(g)).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}
