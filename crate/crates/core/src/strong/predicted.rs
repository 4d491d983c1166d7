//! Computed strong resolving graphs and the closed-form edge sets for the two
//! chain-cycle families.

use std::collections::BTreeSet;

use super::{edge, mmd_pairs, Edge, StrongError};
use crate::chain::{ChainCycle, Parity};
use crate::graph::{Graph, Vertex};

/// Edges present on one side only.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeDiff {
    /// Computed MMD pairs absent from the prediction.
    pub missing: Vec<Edge>,
    /// Predicted pairs that are not MMD.
    pub extra: Vec<Edge>,
}

impl EdgeDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgReport {
    pub vertex_count: usize,
    pub computed_edges: BTreeSet<Edge>,
    pub predicted_edges: Option<BTreeSet<Edge>>,
    pub diff: Option<EdgeDiff>,
    pub isolated_vertices: Vec<Vertex>,
}

impl SrgReport {
    /// `G_SR` as a graph on the full vertex set, isolated vertices kept.
    pub fn graph(&self) -> Graph {
        Graph::new(self.vertex_count, self.computed_edges.iter().copied()).expect("MMD pairs are valid edges")
    }

    pub fn with_prediction(mut self, predicted: BTreeSet<Edge>) -> Self {
        let missing = self.computed_edges.difference(&predicted).copied().collect();
        let extra = predicted.difference(&self.computed_edges).copied().collect();
        self.diff = Some(EdgeDiff { missing, extra });
        self.predicted_edges = Some(predicted);
        self
    }

    /// `Some(true)` when a prediction is attached and matches exactly.
    pub fn prediction_holds(&self) -> Option<bool> {
        self.diff.as_ref().map(EdgeDiff::is_empty)
    }
}

pub fn strong_resolving_graph(g: &Graph) -> Result<SrgReport, StrongError> {
    let computed_edges = mmd_pairs(&g.distance_matrix(), g)?;
    let mut touched = vec![false; g.vertex_count()];
    for &(u, v) in &computed_edges {
        touched[u] = true;
        touched[v] = true;
    }
    let isolated_vertices = (0..g.vertex_count()).filter(|&v| !touched[v]).collect();
    Ok(SrgReport { vertex_count: g.vertex_count(), computed_edges, predicted_edges: None, diff: None, isolated_vertices })
}

/// Antipodal pairs `v^i_j v^i_{j + n_i/2}` for `j in 2..=n_i/2` and
/// `n_i/2+2..=n_i` (indices mod `n_i`), plus `v^1_1 v^m_{n_m/2+1}`.
pub fn predicted_srg_even(cc: &ChainCycle) -> Result<BTreeSet<Edge>, StrongError> {
    if cc.parity() != Parity::Even {
        return Err(StrongError::ParityMismatch(Parity::Even));
    }
    let mut edges = BTreeSet::new();
    for i in 1..=cc.m() {
        let n = cc.n(i);
        let half = n / 2;
        for j in (2..=half).chain(half + 2..=n) {
            edges.insert(edge(cc.at(i, j), cc.at(i, j + half)));
        }
    }
    let m = cc.m();
    edges.insert(edge(cc.at(1, 1), cc.at(m, cc.n(m) / 2 + 1)));
    Ok(edges)
}

fn check_odd(cc: &ChainCycle) -> Result<(), StrongError> {
    if cc.parity() != Parity::Odd {
        return Err(StrongError::ParityMismatch(Parity::Odd));
    }
    if let Some(&n) = cc.cycle_lengths().iter().find(|&&n| n < 5) {
        return Err(StrongError::Hypothesis(format!("odd cycle lengths must be >= 5, got {n}")));
    }
    Ok(())
}

/// The far-vertex path of odd cycle `i`, as a vertex sequence:
///
/// * `i = 1`: `v_1, v_{1+f}, v_{1+2f}, ..` with `n_1 - 1` vertices (`f = floor(n/2)`), ending at `v_2`;
/// * `i = m`: `v_c, v_{c+f}, ..` with `n_m - 1` vertices (`c = (n+1)/2`), ending at `v_{c+1}`;
/// * middle: `v_2, v_{2+c}, v_{2+2c}, ..` with `n_i - 2` vertices, ending at `v_c`.
pub fn odd_far_path(cc: &ChainCycle, i: usize) -> Vec<Vertex> {
    let n = cc.n(i);
    let (f, c) = (n / 2, n.div_ceil(2));
    let (start, step, len) = if i == 1 {
        (1, f, n - 1)
    } else if i == cc.m() {
        (c, f, n - 1)
    } else {
        (2, c, n - 2)
    };
    (0..len).map(|t| cc.at(i, start + t * step)).collect()
}

fn odd_cross_edges(cc: &ChainCycle, edges: &mut BTreeSet<Edge>, b4_forward_only: bool) {
    let m = cc.m();
    let cm = cc.n(m).div_ceil(2);
    let last = [cc.at(m, cm), cc.at(m, cm + 1)];
    let centre = |k: usize| cc.at(k, cc.n(k).div_ceil(2));
    for j in [1, 2] {
        let head = cc.at(1, j);
        for &l in &last {
            edges.insert(edge(head, l)); // B1
        }
        for k in 2..m {
            edges.insert(edge(head, centre(k))); // B2
        }
    }
    for i in 2..m {
        let second = cc.at(i, 2);
        for &l in &last {
            edges.insert(edge(second, l)); // B3
        }
        for k in 2..m {
            if k == i || (b4_forward_only && k < i) {
                continue;
            }
            edges.insert(edge(second, centre(k))); // B4
        }
    }
}

/// `A_1 ∪ A_2 ∪ A_3 ∪ B_1 ∪ .. ∪ B_4`, with the within-cycle sets taken as the
/// consecutive pairs of [`odd_far_path`] and `B_4` pairing middle cycles `i < k`.
pub fn predicted_srg_odd(cc: &ChainCycle) -> Result<BTreeSet<Edge>, StrongError> {
    check_odd(cc)?;
    let mut edges = BTreeSet::new();
    for i in 1..=cc.m() {
        let path = odd_far_path(cc, i);
        edges.extend(path.windows(2).map(|w| edge(w[0], w[1])));
    }
    odd_cross_edges(cc, &mut edges, true);
    Ok(edges)
}

/// The odd edge sets with the within-cycle index ranges expanded as listed
/// (`A_1`: `j in 1..=c, c+2..=n`; `A_2`: `j in 2..=n`; `A_3`: `j in 2..=c, c+2..=n`,
/// partner `j + (n-1)/2`) and `B_4` over every ordered pair of distinct middle cycles.
pub fn predicted_srg_odd_literal(cc: &ChainCycle) -> Result<BTreeSet<Edge>, StrongError> {
    check_odd(cc)?;
    let m = cc.m();
    let mut edges = BTreeSet::new();
    for i in 1..=m {
        let n = cc.n(i);
        let (f, c) = (n / 2, n.div_ceil(2));
        let range: Vec<usize> = if i == 1 {
            (1..=c).chain(c + 2..=n).collect()
        } else if i == m {
            (2..=n).collect()
        } else {
            (2..=c).chain(c + 2..=n).collect()
        };
        for j in range {
            edges.insert(edge(cc.at(i, j), cc.at(i, j + f)));
        }
    }
    odd_cross_edges(cc, &mut edges, false);
    Ok(edges)
}

/// The prediction matching the chain's parity.
pub fn predicted_srg(cc: &ChainCycle) -> Result<BTreeSet<Edge>, StrongError> {
    match cc.parity() {
        Parity::Even => predicted_srg_even(cc),
        Parity::Odd => predicted_srg_odd(cc),
    }
}
