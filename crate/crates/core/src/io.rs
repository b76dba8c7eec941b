//! Text formats.
//!
//! Edge list: `#` starts a comment line, blank lines are ignored, the first
//! data line is `N M`, followed by exactly `M` lines `u v`.
//!
//! ```text
//! # triangle
//! 3 3
//! 0 1
//! 1 2
//! 0 2
//! ```
//!
//! The JSON alternative is `{"n": N, "edges": [[u, v], ...]}`.
//!
//! Function files hold one `v a` or `v a/b` line per vertex; vertices that
//! are not listed take the value 0.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::VertexFunction;
use crate::graph::Graph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_fields(line_no: usize, line: &str) -> Result<(&str, &str)> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(parse_error(
            line_no,
            format!("expected two fields, got {line:?}"),
        )),
    }
}

fn parse_usize(line_no: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_error(line_no, format!("{s:?} is not a nonnegative integer")))
}

/// Parses the edge-list format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, "missing \"N M\" header"))?;
    let (n, m) = two_fields(header_no, header)?;
    let n = parse_usize(header_no, n)?;
    let m = parse_usize(header_no, m)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_error(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = two_fields(line_no, line)?;
        let (u, v) = (parse_usize(line_no, u)?, parse_usize(line_no, v)?);
        if let Some(bad) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(parse_error(
                line_no,
                format!("vertex {bad} out of range for {n} vertices"),
            ));
        }
        if u == v {
            return Err(parse_error(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count(),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes the edge-list format. Edges appear as `u v` with `u < v`, sorted;
/// there is no trailing newline.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let j: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    Graph::try_from(j)
}

/// Accepts either format; JSON is recognized by a leading `{`.
pub fn parse_graph_any(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        parse_graph(text)
    }
}

/// Parses `a` or `a/b` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || parse_error(0, format!("{s:?} is not a rational of the form a or a/b"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(parse_error(0, format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Parses a function file for a graph on `n` vertices.
pub fn parse_function(text: &str, n: usize) -> Result<VertexFunction> {
    let mut f = VertexFunction::zeros(n);
    let mut seen = vec![false; n];
    for (line_no, line) in data_lines(text) {
        let (v, a) = two_fields(line_no, line)?;
        let v = parse_usize(line_no, v)?;
        if v >= n {
            return Err(parse_error(
                line_no,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(parse_error(line_no, format!("vertex {v} listed twice")));
        }
        let value = parse_rational(a).map_err(|e| match e {
            Error::Parse { message, .. } => parse_error(line_no, message),
            other => other,
        })?;
        f.set(v, value);
    }
    Ok(f)
}

/// One `v a` or `v a/b` line per vertex, including zeros.
pub fn serialize_function(f: &VertexFunction) -> String {
    f.values()
        .iter()
        .enumerate()
        .map(|(v, a)| format!("{v} {a}"))
        .collect::<Vec<_>>()
        .join("\n")
}
