//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header is optional and may only appear before the first
//! edge. Without it the vertex count is one more than the largest id.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::Graph;
use crate::error::ParseError;

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = HashSet::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line,
            text: raw.to_string(),
        };
        let fields: Vec<&str> = raw.split(' ').collect();
        if fields.len() != 2 {
            return Err(malformed());
        }
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(malformed());
            }
            declared = Some(parse_id(fields[1]).ok_or_else(malformed)?);
            continue;
        }
        let u = parse_id(fields[0]).ok_or_else(malformed)?;
        let v = parse_id(fields[1]).ok_or_else(malformed)?;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if let Some(n) = declared {
            if let Some(&bad) = [u, v].iter().find(|&&w| w >= n) {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex: bad,
                    n,
                });
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        edges.push((u, v));
    }

    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok(Graph::from_edges_lossy(n, edges))
}

/// ASCII decimal without sign or leading '+'.
fn parse_id(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Writes the `n` header followed by edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
