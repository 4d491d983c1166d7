//! Edge-list text and DOT export.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v` of
//! 0-based ids.

use std::fmt::Write;

use thiserror::Error;

use crate::chain::LabeledGraph;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("empty edge list, expected header \"n m\"")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announces {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), IoError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, IoError> {
        let tok = it.next().ok_or_else(|| IoError::Syntax { line, msg: "expected two integers".into() })?;
        tok.parse().map_err(|_| IoError::Syntax { line, msg: format!("not a non-negative integer: {tok:?}") })
    };
    let (a, b) = (next()?, next()?);
    if it.next().is_some() {
        return Err(IoError::Syntax { line, msg: "trailing tokens".into() });
    }
    Ok((a, b))
}

/// Parses an edge list. Blank lines are skipped; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(IoError::MissingHeader)?;
    let (n, m) = pair(hl, header)?;
    let edges = lines.map(|(i, l)| pair(i, l)).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(IoError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

/// Undirected DOT with each node labelled by its canonical name and aliases.
pub fn to_dot(lg: &LabeledGraph, name: &str) -> String {
    let g = lg.graph();
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label=\"{}\"];", lg.display_label(v)).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::build_even_chain_cycle;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("5 5\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(IoError::MissingHeader));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(IoError::Syntax { line: 2, .. })));
        assert_eq!(parse_edge_list("3 2\n0 1\n"), Err(IoError::EdgeCount { declared: 2, found: 1 }));
        assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(IoError::Graph(GraphError::SelfLoop(0)))));
    }

    #[test]
    fn dot_shows_aliases() {
        let cc = build_even_chain_cycle(&[4, 4]).unwrap();
        let dot = to_dot(cc.labeled(), "even:4,4");
        assert!(dot.contains("label=\"v1_3=v2_1\""));
        assert_eq!(dot.matches(" -- ").count(), 8);
    }
}
