//! Text formats: `.sg` for labeled graphs and `.ss` for staircases.
//!
//! ```text
//! # graph                    # staircase
//! node a 1                   dim 2
//! node b 2                   corner 2 0
//! edge a b                   corner 0 1
//! ```
//!
//! `#` starts a comment. A staircase file lists either `corner` or `cell`
//! lines, never both; the writer always emits corners.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{FormatError, GraphError};
use crate::graph::{LabeledGraph, NodeId};
use crate::staircase::{Point, StandardSet};

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut nodes = Vec::new();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    let mut edge_set = BTreeSet::new();
    for (line, words) in tokens(text) {
        match words.as_slice() {
            ["node", id, label] => {
                let id = NodeId::new(*id)?;
                let label: i64 = label
                    .parse()
                    .map_err(|_| syntax(line, format!("invalid label {label:?}")))?;
                if !seen.insert(id.clone()) {
                    return Err(GraphError::DuplicateNode(id).into());
                }
                nodes.push((id, label));
            }
            ["edge", a, b] => {
                let (a, b) = (NodeId::new(*a)?, NodeId::new(*b)?);
                if !edge_set.insert((a.clone(), b.clone())) {
                    return Err(GraphError::DuplicateEdge(a, b).into());
                }
                edges.push((a, b));
            }
            _ => return Err(syntax(line, format!("expected `node <id> <label>` or `edge <src> <dst>`, got {:?}", words.join(" ")))),
        }
    }
    Ok(LabeledGraph::new(nodes, edges)?)
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for i in 0..g.node_count() {
        writeln!(out, "node {} {}", g.id(i), g.label(i)).unwrap();
    }
    for (a, b) in g.edge_ids() {
        writeln!(out, "edge {a} {b}").unwrap();
    }
    out
}

pub fn parse_staircase(text: &str) -> Result<StandardSet, FormatError> {
    let mut lines = tokens(text);
    let (line, first) = lines.next().ok_or_else(|| syntax(1, "missing `dim <d>` line"))?;
    let dim: usize = match first.as_slice() {
        ["dim", d] => d.parse().map_err(|_| syntax(line, format!("invalid dimension {d:?}")))?,
        _ => return Err(syntax(line, "first line must be `dim <d>`")),
    };
    if dim == 0 {
        return Err(syntax(line, "dimension must be positive"));
    }
    let mut kind: Option<&str> = None;
    let mut points = Vec::new();
    for (line, words) in lines {
        let (head, rest) = words.split_first().expect("nonempty");
        if *head != "corner" && *head != "cell" {
            return Err(syntax(line, format!("expected `corner` or `cell`, got {head:?}")));
        }
        match kind {
            Some(k) if k != *head => return Err(syntax(line, "corner and cell lines cannot be mixed")),
            _ => kind = Some(head),
        }
        if rest.len() != dim {
            return Err(syntax(line, format!("expected {dim} coordinates, got {}", rest.len())));
        }
        let coords = rest
            .iter()
            .map(|w| w.parse::<u32>().map_err(|_| syntax(line, format!("invalid coordinate {w:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        points.push(Point(coords));
    }
    let set = match kind {
        Some("corner") => StandardSet::from_corners(dim, points)?,
        _ => StandardSet::from_cells(dim, points)?,
    };
    Ok(set)
}

pub fn write_staircase(s: &StandardSet) -> String {
    let mut out = format!("dim {}\n", s.dim());
    for c in s.corners() {
        let coords: Vec<String> = c.coords().iter().map(u32::to_string).collect();
        writeln!(out, "corner {}", coords.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "# diamond\nnode b 1\nnode l 2\nnode r 2\nnode t 3\nedge b l\nedge b r\nedge l t # up\nedge r t\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(
            parse_graph("node a 1\nnode a 2\n"),
            Err(FormatError::Graph(GraphError::DuplicateNode(_)))
        ));
        assert!(matches!(
            parse_graph("node a 1\nnode b 1\nedge a b\nedge a b\n"),
            Err(FormatError::Graph(GraphError::DuplicateEdge(..)))
        ));
        assert!(matches!(parse_graph("node a x\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("vertex a 1\n"), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn staircase_round_trip() {
        let s = parse_staircase("dim 2\ncell 0 0\ncell 1 0\ncell 0 1\n").unwrap();
        assert_eq!(write_staircase(&s), "dim 2\ncorner 0 2\ncorner 1 1\ncorner 2 0\n");
        assert_eq!(parse_staircase(&write_staircase(&s)).unwrap(), s);
        assert!(parse_staircase("dim 2\n").unwrap().is_empty());
    }

    #[test]
    fn staircase_errors() {
        assert!(parse_staircase("dim 2\ncell 0 0\ncorner 1 0\n").is_err());
        assert!(parse_staircase("corner 1 0\n").is_err());
        assert!(parse_staircase("dim 2\ncell 0\n").is_err());
        assert!(matches!(
            parse_staircase("dim 2\ncell 1 0\n"),
            Err(FormatError::Staircase(_))
        ));
    }
}
