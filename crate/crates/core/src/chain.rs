//! Chain graphs built by vertex identification, and the two chain-cycle
//! families with their `v^i_j` labelling.
//!
//! Cycle `i` (1-based) has positions `j = 1..=n_i`. In a chain cycle the
//! attachment vertex `v^i_{a_i}` is identified with `v^{i+1}_1`, where
//! `a_i = n_i/2 + 1` for even cycles and `(n_i + 1)/2 + 1` for odd cycles.
//! The earlier cycle owns the merged vertex; `v^{i+1}_1` becomes an alias.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("a chain needs at least {min} parts, got {got}")]
    TooFewParts { min: usize, got: usize },
    #[error("{got} attachment pairs given for {parts} parts")]
    AttachmentCount { parts: usize, got: usize },
    #[error("part {part} has no vertex labelled {label:?}")]
    UnknownLabel { part: usize, label: String },
    #[error("label {0:?} occurs in more than one part")]
    DuplicateLabel(String),
    #[error("part {0} is a single vertex and cannot carry a distinct attachment pair")]
    DegenerateAttachment(usize),
    #[error("parity: {family} chain cycle needs {family} cycle lengths, got {n}")]
    Parity { family: Parity, n: usize },
    #[error("even chain cycles need cycle lengths >= 4, got {0}")]
    EvenTooShort(usize),
    #[error("position v{i}_{j} does not exist in this chain")]
    PositionOutOfRange { i: usize, j: usize },
    #[error("cycle halves are only defined for even chain cycles")]
    HalvesNeedEven,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph whose vertices carry display labels.
///
/// `label_of` is the canonical name of each vertex. Identified vertices keep
/// the names of the merged copies as aliases, all of which resolve through
/// [`LabeledGraph::id_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<String>,
    aliases: Vec<Vec<String>>,
    names: HashMap<String, Vertex>,
}

impl LabeledGraph {
    /// Wraps a graph, labelling every vertex with `label(v)`. Labels must be unique.
    pub fn new(graph: Graph, label: impl Fn(Vertex) -> String) -> Result<Self, ChainError> {
        let labels: Vec<String> = (0..graph.vertex_count()).map(label).collect();
        let mut names = HashMap::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            if names.insert(l.clone(), v).is_some() {
                return Err(ChainError::DuplicateLabel(l.clone()));
            }
        }
        let aliases = vec![Vec::new(); labels.len()];
        Ok(LabeledGraph { graph, labels, aliases, names })
    }

    /// Labels vertices by their numeric id.
    pub fn numbered(graph: Graph) -> Self {
        Self::new(graph, |v| v.to_string()).expect("numeric labels are unique")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label_of(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    /// Canonical label followed by its aliases, joined with `=`.
    pub fn display_label(&self, v: Vertex) -> String {
        std::iter::once(self.labels[v].as_str())
            .chain(self.aliases[v].iter().map(String::as_str))
            .collect::<Vec<_>>()
            .join("=")
    }

    pub fn aliases(&self, v: Vertex) -> &[String] {
        &self.aliases[v]
    }

    pub fn id_of(&self, label: &str) -> Option<Vertex> {
        self.names.get(label).copied()
    }
}

/// `C_n` with labels `v1..vn` and edges `v_j v_{j+1}`, `v_n v_1`.
pub fn build_cycle(n: usize) -> Result<LabeledGraph, ChainError> {
    labeled_cycle(n, |j| format!("v{j}"))
}

fn labeled_cycle(n: usize, label: impl Fn(usize) -> String) -> Result<LabeledGraph, ChainError> {
    if n < 3 {
        return Err(ChainError::CycleTooShort(n));
    }
    LabeledGraph::new(Graph::cycle(n)?, |v| label(v + 1))
}

/// The chain graph `C(G_1, .., G_m; x_1, w_1, .., x_m, w_m)`: `w_i` of part `i`
/// is identified with `x_{i+1}` of part `i + 1`.
///
/// `attachments[i]` is the `(x, w)` label pair of part `i`. Labels must be unique
/// across parts. Ids are assigned part by part in each part's id order, with the
/// absorbed `x_{i+1}` skipped.
pub fn build_chain(
    parts: &[LabeledGraph],
    attachments: &[(String, String)],
) -> Result<LabeledGraph, ChainError> {
    if parts.is_empty() {
        return Err(ChainError::TooFewParts { min: 1, got: 0 });
    }
    if attachments.len() != parts.len() {
        return Err(ChainError::AttachmentCount { parts: parts.len(), got: attachments.len() });
    }
    let mut seen = BTreeSet::new();
    for part in parts {
        for l in part.labels.iter().chain(part.aliases.iter().flatten()) {
            if !seen.insert(l.as_str()) {
                return Err(ChainError::DuplicateLabel(l.clone()));
            }
        }
    }
    let mut ends = Vec::with_capacity(parts.len());
    for (idx, (part, (x, w))) in parts.iter().zip(attachments).enumerate() {
        let lookup = |l: &String| {
            part.id_of(l).ok_or_else(|| ChainError::UnknownLabel { part: idx + 1, label: l.clone() })
        };
        let (xv, wv) = (lookup(x)?, lookup(w)?);
        if xv == wv && part.graph.vertex_count() <= 1 && parts.len() > 1 {
            return Err(ChainError::DegenerateAttachment(idx + 1));
        }
        ends.push((xv, wv));
    }

    let mut labels: Vec<String> = Vec::new();
    let mut aliases: Vec<Vec<String>> = Vec::new();
    let mut edges = Vec::new();
    let mut previous_w: Option<Vertex> = None;
    for (part, &(xv, wv)) in parts.iter().zip(&ends) {
        let mut map = vec![usize::MAX; part.graph.vertex_count()];
        for (v, slot) in map.iter_mut().enumerate() {
            match previous_w {
                Some(target) if v == xv => {
                    *slot = target;
                    aliases[target].push(part.labels[v].clone());
                    aliases[target].extend(part.aliases[v].iter().cloned());
                }
                _ => {
                    *slot = labels.len();
                    labels.push(part.labels[v].clone());
                    aliases.push(part.aliases[v].clone());
                }
            }
        }
        edges.extend(part.graph.edges().iter().map(|&(u, v)| (map[u], map[v])));
        previous_w = Some(map[wv]);
    }

    let graph = Graph::new(labels.len(), edges)?;
    let mut names = HashMap::new();
    for (v, l) in labels.iter().enumerate() {
        names.insert(l.clone(), v);
    }
    for (v, list) in aliases.iter().enumerate() {
        for l in list {
            names.insert(l.clone(), v);
        }
    }
    Ok(LabeledGraph { graph, labels, aliases, names })
}

/// Which family a chain cycle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl Parity {
    /// Position `a` on a cycle of length `n` that is glued to the next cycle's `v_1`.
    pub fn attachment_position(self, n: usize) -> usize {
        match self {
            Parity::Even => n / 2 + 1,
            Parity::Odd => n.div_ceil(2) + 1,
        }
    }
}

/// A chain of all-even or all-odd cycles glued at (near-)antipodal vertices.
#[derive(Debug, Clone)]
pub struct ChainCycle {
    lg: LabeledGraph,
    cycle_lengths: Vec<usize>,
    parity: Parity,
    /// `positions[i-1][j-1]` is the canonical id of `v^i_j`.
    positions: Vec<Vec<Vertex>>,
    /// Canonical `(i, j)` of each id.
    owner: Vec<(usize, usize)>,
    cut_vertices: Vec<Vertex>,
}

pub fn position_label(i: usize, j: usize) -> String {
    format!("v{i}_{j}")
}

/// Parses `v<i>_<j>` into `(i, j)`.
pub fn parse_position_label(label: &str) -> Option<(usize, usize)> {
    let (i, j) = label.strip_prefix('v')?.split_once('_')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

pub fn build_even_chain_cycle(ns: &[usize]) -> Result<ChainCycle, ChainError> {
    ChainCycle::new(Parity::Even, ns)
}

pub fn build_odd_chain_cycle(ns: &[usize]) -> Result<ChainCycle, ChainError> {
    ChainCycle::new(Parity::Odd, ns)
}

impl ChainCycle {
    pub fn new(parity: Parity, ns: &[usize]) -> Result<Self, ChainError> {
        if ns.len() < 2 {
            return Err(ChainError::TooFewParts { min: 2, got: ns.len() });
        }
        for &n in ns {
            let even = n % 2 == 0;
            match parity {
                Parity::Even if !even => return Err(ChainError::Parity { family: parity, n }),
                Parity::Even if n < 4 => return Err(ChainError::EvenTooShort(n)),
                Parity::Odd if even => return Err(ChainError::Parity { family: parity, n }),
                Parity::Odd if n < 3 => return Err(ChainError::CycleTooShort(n)),
                _ => {}
            }
        }
        let parts = ns
            .iter()
            .enumerate()
            .map(|(idx, &n)| labeled_cycle(n, |j| position_label(idx + 1, j)))
            .collect::<Result<Vec<_>, _>>()?;
        let attachments: Vec<(String, String)> = ns
            .iter()
            .enumerate()
            .map(|(idx, &n)| {
                (position_label(idx + 1, 1), position_label(idx + 1, parity.attachment_position(n)))
            })
            .collect();
        let lg = build_chain(&parts, &attachments)?;

        let positions: Vec<Vec<Vertex>> = ns
            .iter()
            .enumerate()
            .map(|(idx, &n)| {
                (1..=n).map(|j| lg.id_of(&position_label(idx + 1, j)).expect("every position is labelled")).collect()
            })
            .collect();
        let owner = (0..lg.graph().vertex_count())
            .map(|v| parse_position_label(lg.label_of(v)).expect("chain labels are positions"))
            .collect();
        let cut_vertices = positions[1..].iter().map(|cycle| cycle[0]).collect();
        Ok(ChainCycle { lg, cycle_lengths: ns.to_vec(), parity, positions, owner, cut_vertices })
    }

    pub fn labeled(&self) -> &LabeledGraph {
        &self.lg
    }

    pub fn graph(&self) -> &Graph {
        self.lg.graph()
    }

    pub fn cycle_lengths(&self) -> &[usize] {
        &self.cycle_lengths
    }

    /// Length `n_i` of cycle `i` (1-based). Panics if `i` is out of range.
    pub fn n(&self, i: usize) -> usize {
        self.cycle_lengths[i - 1]
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of cycles `m`.
    pub fn m(&self) -> usize {
        self.cycle_lengths.len()
    }

    /// The `m - 1` identified vertices, in chain order.
    pub fn cut_vertices(&self) -> &[Vertex] {
        &self.cut_vertices
    }

    /// Attachment position `a_i` on cycle `i`.
    pub fn attachment(&self, i: usize) -> usize {
        self.parity.attachment_position(self.n(i))
    }

    /// Canonical id of `v^i_j`.
    pub fn resolve_label(&self, i: usize, j: usize) -> Result<Vertex, ChainError> {
        self.positions
            .get(i.wrapping_sub(1))
            .and_then(|cycle| cycle.get(j.wrapping_sub(1)))
            .copied()
            .ok_or(ChainError::PositionOutOfRange { i, j })
    }

    /// `v^i_j` with `j` taken modulo `n_i` into `1..=n_i`.
    pub fn at(&self, i: usize, j: usize) -> Vertex {
        let n = self.n(i);
        self.positions[i - 1][(j + n - 1) % n]
    }

    /// Canonical `(i, j)` position of a vertex.
    pub fn position_of(&self, v: Vertex) -> (usize, usize) {
        self.owner[v]
    }

    /// `(U_1, U_2)` of cycle `i`: positions `1..=n_i/2` and `n_i/2+1..=n_i`.
    pub fn halves(&self, i: usize) -> Result<(Vec<Vertex>, Vec<Vertex>), ChainError> {
        if self.parity != Parity::Even {
            return Err(ChainError::HalvesNeedEven);
        }
        let n = self.cycle_lengths.get(i.wrapping_sub(1)).copied().ok_or(ChainError::PositionOutOfRange { i, j: 1 })?;
        let cycle = &self.positions[i - 1];
        Ok((cycle[..n / 2].to_vec(), cycle[n / 2..].to_vec()))
    }

    /// Vertices in canonical `(i, j)` order, which is also ascending id order.
    pub fn vertices_in_order(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = (0..self.graph().vertex_count()).collect();
        vs.sort_by_key(|&v| self.owner[v]);
        vs
    }

    /// Spec string such as `even:8,10,8`.
    pub fn spec_string(&self) -> String {
        let ns: Vec<String> = self.cycle_lengths.iter().map(usize::to_string).collect();
        format!("{}:{}", self.parity, ns.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cycles() {
        let c3 = build_cycle(3).unwrap();
        assert_eq!((c3.graph().vertex_count(), c3.graph().edge_count()), (3, 3));
        let c8 = build_cycle(8).unwrap();
        assert!((0..8).all(|v| c8.graph().degree(v).unwrap() == 2));
        assert_eq!(c8.graph().diameter().unwrap(), 4);
        assert_eq!(build_cycle(2).unwrap_err(), ChainError::CycleTooShort(2));
    }

    #[test]
    fn bowtie_from_two_triangles() {
        let a = LabeledGraph::new(Graph::cycle(3).unwrap(), |v| format!("a{v}")).unwrap();
        let b = LabeledGraph::new(Graph::cycle(3).unwrap(), |v| format!("b{v}")).unwrap();
        let att = vec![("a0".to_string(), "a1".to_string()), ("b0".to_string(), "b2".to_string())];
        let bowtie = build_chain(&[a, b], &att).unwrap();
        assert_eq!(bowtie.graph().vertex_count(), 5);
        assert_eq!(bowtie.graph().edge_count(), 6);
        let hub = bowtie.id_of("a1").unwrap();
        assert_eq!(bowtie.id_of("b0"), Some(hub));
        assert_eq!(bowtie.graph().degree(hub).unwrap(), 4);
        assert_eq!(bowtie.display_label(hub), "a1=b0");
    }

    #[test]
    fn single_part_is_unchanged() {
        let c = build_cycle(5).unwrap();
        let out = build_chain(std::slice::from_ref(&c), &[("v1".into(), "v3".into())]).unwrap();
        assert_eq!(out, c);
    }

    #[test]
    fn chain_errors() {
        let c = build_cycle(4).unwrap();
        let err = build_chain(std::slice::from_ref(&c), &[("v1".into(), "v9".into())]).unwrap_err();
        assert_eq!(err, ChainError::UnknownLabel { part: 1, label: "v9".into() });
        let err = build_chain(&[c.clone(), c.clone()], &[("v1".into(), "v2".into()), ("v1".into(), "v2".into())])
            .unwrap_err();
        assert!(matches!(err, ChainError::DuplicateLabel(_)));
        let dot = LabeledGraph::new(Graph::new(1, []).unwrap(), |_| "p".into()).unwrap();
        let err = build_chain(&[c, dot], &[("v1".into(), "v2".into()), ("p".into(), "p".into())]).unwrap_err();
        assert_eq!(err, ChainError::DegenerateAttachment(2));
    }

    #[test]
    fn even_chain_attachments() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        assert_eq!(cc.graph().vertex_count(), 24);
        assert_eq!(cc.graph().edge_count(), 26);
        assert_eq!(cc.resolve_label(1, 5).unwrap(), cc.resolve_label(2, 1).unwrap());
        assert_eq!(cc.resolve_label(2, 6).unwrap(), cc.resolve_label(3, 1).unwrap());
        assert_eq!(cc.cut_vertices(), &[cc.resolve_label(1, 5).unwrap(), cc.resolve_label(2, 6).unwrap()]);
        assert_eq!(cc.labeled().display_label(cc.resolve_label(1, 5).unwrap()), "v1_5=v2_1");

        let v15 = cc.resolve_label(1, 5).unwrap();
        let mut expected: Vec<Vertex> = [(1, 4), (1, 6), (2, 2), (2, 10)]
            .iter()
            .map(|&(i, j)| cc.resolve_label(i, j).unwrap())
            .collect();
        expected.sort_unstable();
        assert_eq!(cc.graph().neighbors(v15).unwrap(), expected.as_slice());
    }

    #[test]
    fn small_chain_counts() {
        // 4 + 4 - 1 vertices and 4 + 4 edges
        let cc = build_even_chain_cycle(&[4, 4]).unwrap();
        assert_eq!((cc.graph().vertex_count(), cc.graph().edge_count()), (7, 8));
        let cc = build_odd_chain_cycle(&[5, 5]).unwrap();
        assert_eq!((cc.graph().vertex_count(), cc.graph().edge_count()), (9, 10));
    }

    #[test]
    fn odd_chain_attachments() {
        let cc = build_odd_chain_cycle(&[5, 7, 5]).unwrap();
        assert_eq!(cc.resolve_label(1, 4).unwrap(), cc.resolve_label(2, 1).unwrap());
        assert_eq!(cc.resolve_label(2, 5).unwrap(), cc.resolve_label(3, 1).unwrap());
        assert_eq!(cc.graph().vertex_count(), 15);
        assert!(build_odd_chain_cycle(&[3, 3]).is_ok());
    }

    #[test]
    fn parity_and_size_errors() {
        let err = build_even_chain_cycle(&[6, 7]).unwrap_err();
        assert!(err.to_string().contains("parity"));
        let err = build_odd_chain_cycle(&[5, 6]).unwrap_err();
        assert!(err.to_string().contains("parity"));
        assert_eq!(build_even_chain_cycle(&[2, 4]).unwrap_err(), ChainError::EvenTooShort(2));
        assert_eq!(build_even_chain_cycle(&[8]).unwrap_err(), ChainError::TooFewParts { min: 2, got: 1 });
    }

    #[test]
    fn label_resolution() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let first = cc.resolve_label(1, 1).unwrap();
        assert_eq!(first, 0);
        assert_eq!(cc.graph().degree(first).unwrap(), 2);
        assert!(matches!(cc.resolve_label(4, 1), Err(ChainError::PositionOutOfRange { i: 4, j: 1 })));
        assert!(cc.resolve_label(1, 9).is_err());
        assert!(cc.resolve_label(0, 1).is_err());
        assert_eq!(cc.position_of(cc.resolve_label(2, 1).unwrap()), (1, 5));
        assert_eq!(cc.at(2, 11), cc.resolve_label(2, 1).unwrap());
    }

    #[test]
    fn halves_split_each_cycle() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let (u1, u2) = cc.halves(1).unwrap();
        assert_eq!((u1.len(), u2.len()), (4, 4));
        assert_eq!(u2[0], cc.resolve_label(1, 5).unwrap());
        let (u1, u2) = cc.halves(2).unwrap();
        assert_eq!((u1.len(), u2.len()), (5, 5));
        let odd = build_odd_chain_cycle(&[5, 5]).unwrap();
        assert_eq!(odd.halves(1).unwrap_err(), ChainError::HalvesNeedEven);
    }

    #[test]
    fn position_labels_round_trip() {
        assert_eq!(parse_position_label("v12_3"), Some((12, 3)));
        assert_eq!(parse_position_label("x1_2"), None);
        assert_eq!(parse_position_label("v1"), None);
    }
}
