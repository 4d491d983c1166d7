//! Exact minimum vertex cover by branch and bound.
//!
//! Each node first applies the forced reductions (drop isolated vertices, take
//! the neighbour of every degree-1 vertex), prunes with a greedy maximal
//! matching as lower bound, then branches on the highest-degree vertex
//! (lowest id on ties): either the vertex joins the cover, or all of its
//! neighbours do.

use serde::Serialize;

use super::Edge;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMethod {
    BranchBound,
    PaperConstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub cover: Vec<Vertex>,
    pub size: usize,
    pub method: CoverMethod,
    /// `n - size`, the independence number when the cover is minimum.
    pub independence: usize,
}

impl CoverResult {
    pub(crate) fn new(cover: Vec<Vertex>, n: usize, method: CoverMethod) -> Self {
        let size = cover.len();
        CoverResult { cover, size, method, independence: n - size }
    }
}

/// Edges with neither endpoint in `cover`.
pub fn uncovered_edges<'a>(edges: impl IntoIterator<Item = &'a Edge>, cover: &[Vertex]) -> Vec<Edge> {
    let mut inside = std::collections::HashSet::with_capacity(cover.len());
    inside.extend(cover.iter().copied());
    edges.into_iter().filter(|(u, v)| !inside.contains(u) && !inside.contains(v)).copied().collect()
}

#[derive(Clone)]
struct State {
    alive: Vec<bool>,
    degree: Vec<usize>,
    chosen: Vec<Vertex>,
}

impl State {
    fn remove(&mut self, g: &Graph, v: Vertex) {
        self.alive[v] = false;
        for &w in g.adj(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
            }
        }
    }

    fn take(&mut self, g: &Graph, v: Vertex) {
        self.chosen.push(v);
        self.remove(g, v);
    }

    fn reduce(&mut self, g: &Graph) {
        loop {
            let mut changed = false;
            for v in 0..self.alive.len() {
                if !self.alive[v] {
                    continue;
                }
                match self.degree[v] {
                    0 => self.alive[v] = false,
                    1 => {
                        let u = *g.adj(v).iter().find(|&&w| self.alive[w]).expect("degree 1 has a live neighbour");
                        self.take(g, u);
                        self.alive[v] = false;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn matching_bound(&self, g: &Graph) -> usize {
        let mut matched = vec![false; self.alive.len()];
        let mut size = 0;
        for &(u, v) in g.edges() {
            if self.alive[u] && self.alive[v] && !matched[u] && !matched[v] {
                matched[u] = true;
                matched[v] = true;
                size += 1;
            }
        }
        size
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self, mut state: State) {
        state.reduce(self.g);
        if state.chosen.len() >= self.best.len() {
            return;
        }
        let pivot = (0..state.alive.len())
            .filter(|&v| state.alive[v] && state.degree[v] > 0)
            .max_by(|&a, &b| state.degree[a].cmp(&state.degree[b]).then(b.cmp(&a)));
        let Some(pivot) = pivot else {
            self.best = state.chosen;
            return;
        };
        if state.chosen.len() + state.matching_bound(self.g) >= self.best.len() {
            return;
        }

        let mut with_pivot = state.clone();
        with_pivot.take(self.g, pivot);
        self.run(with_pivot);

        let neighbours: Vec<Vertex> = self.g.adj(pivot).iter().copied().filter(|&w| state.alive[w]).collect();
        for w in neighbours {
            state.take(self.g, w);
        }
        state.alive[pivot] = false;
        self.run(state);
    }
}

/// A minimum vertex cover, sorted ascending. Works on any graph, including
/// ones with isolated vertices.
pub fn min_vertex_cover(g: &Graph) -> CoverResult {
    let n = g.vertex_count();
    let state = State {
        alive: vec![true; n],
        degree: (0..n).map(|v| g.adj(v).len()).collect(),
        chosen: Vec::new(),
    };
    // every non-isolated vertex is a valid starting incumbent
    let incumbent: Vec<Vertex> = (0..n).filter(|&v| !g.adj(v).is_empty()).collect();
    let mut search = Search { g, best: incumbent };
    search.run(state);
    let mut cover = search.best;
    cover.sort_unstable();
    CoverResult::new(cover, n, CoverMethod::BranchBound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn covers(g: &Graph, cover: &[Vertex]) -> bool {
        uncovered_edges(g.edges(), cover).is_empty()
    }

    #[test]
    fn small_covers() {
        let edge = Graph::path(2).unwrap();
        assert_eq!(min_vertex_cover(&edge).size, 1);
        let p5 = Graph::path(5).unwrap();
        let r = min_vertex_cover(&p5);
        assert_eq!(r.size, 2);
        assert!(covers(&p5, &r.cover));
        assert_eq!(r.independence, 3);
        let empty = Graph::new(4, []).unwrap();
        assert_eq!(min_vertex_cover(&empty).size, 0);
    }

    #[test]
    fn odd_cycles_and_cliques() {
        for n in 3..10 {
            let c = Graph::cycle(n).unwrap();
            let r = min_vertex_cover(&c);
            assert_eq!(r.size, n.div_ceil(2), "C_{n}");
            assert!(covers(&c, &r.cover));
        }
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(min_vertex_cover(&k5).size, 4);
    }

    #[test]
    fn petersen_graph() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let r = min_vertex_cover(&g);
        assert_eq!(r.size, 6);
        assert!(covers(&g, &r.cover));
    }

    #[test]
    fn uncovered_edge_listing() {
        let edges = [(0, 1), (1, 2), (2, 3)];
        assert_eq!(uncovered_edges(&edges, &[1]), vec![(2, 3)]);
    }
}
