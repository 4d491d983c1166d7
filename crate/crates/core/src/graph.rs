//! Immutable simple undirected graphs and breadth-first distances.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted so that every
//! scan over a neighbourhood is deterministic.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Dense vertex identifier.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0} in pair ({0},{0})")]
    SelfLoop(Vertex),
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} vertices, at least 2 required")]
    TooSmall(usize),
}

/// A simple undirected graph with normalized edges (`u < v`, sorted, unique).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, deduplicating repeated pairs in either orientation.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::EndpointOutOfRange { u, v, n: vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges: set.into_iter().collect(), adjacency })
    }

    /// The cycle `0-1-..-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall(n));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges in ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex], GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange { v, n: self.vertex_count })
    }

    /// Neighbour list without a range check, for callers that already validated `v`.
    pub(crate) fn adj(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[Vertex]>::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency.get(u).is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    /// True iff the graph is isomorphic to a path on at least two vertices.
    pub fn is_path_graph(&self) -> Result<bool, GraphError> {
        if self.vertex_count < 2 {
            return Err(GraphError::TooSmall(self.vertex_count));
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut leaves = 0;
        for list in &self.adjacency {
            match list.len() {
                1 => leaves += 1,
                2 => {}
                _ => return Ok(false),
            }
        }
        Ok(leaves == 2)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        self.distance_matrix().diameter()
    }
}

/// Sentinel for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

fn bfs(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.adj(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances stored as a dense row-major `n x n` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(bfs(g, s));
        }
        DistanceMatrix { n, dist }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Hop distance, or [`UNREACHABLE`]. Panics if either id is out of range.
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.dist.iter().copied().max().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_degree_two_everywhere() {
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors_name_the_pair() {
        let err = Graph::new(4, [(0, 0)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop(0));
        assert!(err.to_string().contains("self-loop"));
        let err = Graph::new(3, [(0, 3)]).unwrap_err();
        assert!(matches!(err, GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 }));
    }

    #[test]
    fn neighbors_are_sorted() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.neighbors(0).unwrap(), &[1, 3]);
        let edge = Graph::path(2).unwrap();
        assert_eq!(edge.neighbors(1).unwrap(), &[0]);
        assert!(c4.neighbors(4).is_err());
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(Graph::cycle(6).unwrap().distance_matrix().get(0, 3), 3);
        assert_eq!(Graph::path(4).unwrap().distance_matrix().get(0, 3), 3);
        assert_eq!(Graph::cycle(8).unwrap().diameter().unwrap(), 4);
        assert_eq!(Graph::cycle(5).unwrap().diameter().unwrap(), 2);
    }

    #[test]
    fn disconnected_graphs() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.distance_matrix().get(0, 2), UNREACHABLE);
        assert_eq!(g.diameter(), Err(GraphError::Disconnected));
        assert_eq!(g.is_path_graph(), Err(GraphError::Disconnected));
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(Graph::cycle(4).unwrap().is_connected());
    }

    #[test]
    fn path_recognition() {
        assert!(Graph::path(5).unwrap().is_path_graph().unwrap());
        assert!(Graph::path(2).unwrap().is_path_graph().unwrap());
        assert!(!Graph::cycle(5).unwrap().is_path_graph().unwrap());
        assert_eq!(Graph::path(1).unwrap().is_path_graph(), Err(GraphError::TooSmall(1)));
        // star K_{1,3}: connected, not a path
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.is_path_graph().unwrap());
    }
}
