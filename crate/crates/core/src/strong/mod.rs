//! Strong metric dimension via the strong resolving graph.
//!
//! `G_SR` joins mutually maximally distant vertices; a minimum vertex cover of
//! `G_SR` is a strong metric basis. Both that route and a direct subset search
//! are provided so that each can check the other.

mod cover;
mod mmd;
mod predicted;
mod sdim;

use thiserror::Error;

use crate::chain::Parity;
use crate::graph::{GraphError, Vertex};

pub use cover::{min_vertex_cover, uncovered_edges, CoverMethod, CoverResult};
pub use mmd::{is_maximally_distant, is_strong_resolving_set, mmd_pairs, strongly_resolves};
pub use predicted::{
    odd_far_path, predicted_srg, predicted_srg_even, predicted_srg_odd, predicted_srg_odd_literal,
    strong_resolving_graph, EdgeDiff, SrgReport,
};
pub use sdim::{
    paper_cover, paper_cover_literal, sdim_formula, strong_metric_dimension, SdimCertificate, SdimMethod,
    SdimResult, SdimRoute, MAX_BRUTE_FORCE_VERTICES,
};

/// Unordered vertex pair stored as `(min, max)`.
pub type Edge = (Vertex, Vertex);

pub(crate) fn edge(u: Vertex, v: Vertex) -> Edge {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrongError {
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(Vertex),
    #[error("strong resolving set must be non-empty")]
    EmptySet,
    #[error("size gate: brute-force search allows at most {max} vertices, got {n}")]
    SizeGate { n: usize, max: usize },
    #[error("parity mismatch: construction needs a {0} chain cycle")]
    ParityMismatch(Parity),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("constructed cover misses edge ({0},{1})")]
    UncoveredEdge(Vertex, Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
