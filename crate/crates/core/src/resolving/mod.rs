//! Resolving partitions and resolving sets.
//!
//! Representations are always computed from BFS distances. The closed-form
//! representations of the chain-cycle constructions live in [`claims`] and are
//! only ever compared against the computed values.

pub mod claims;
pub mod exact;
pub mod paper;
mod partition;

use thiserror::Error;

use crate::graph::{GraphError, Vertex};

pub use exact::{metric_basis_exact, metric_dimension_exact, partition_dimension_exact, KBlockPartitions, MAX_EXACT_VERTICES};
pub use paper::{paper_partition, paper_partition_even, paper_partition_odd, partition_dimension_chain};
pub use partition::{
    find_collision, is_resolving_partition, is_resolving_set, partition_representation, set_representation, Collision,
    Partition, Representation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("partition has no blocks")]
    NoBlocks,
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("vertex {0} appears in more than one block")]
    Overlap(Vertex),
    #[error("vertex {0} is not covered by any block")]
    Uncovered(Vertex),
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    SizeMismatch { partition: usize, graph: usize },
    #[error("size gate: exact search allows at most {max} vertices, got {n}")]
    SizeGate { n: usize, max: usize },
    #[error("k_max must be at least 1")]
    ZeroBlocks,
    #[error("landmark set is empty")]
    EmptyLandmarks,
    #[error("parity mismatch: construction needs a {0} chain cycle")]
    ParityMismatch(crate::chain::Parity),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("constructed partition is not resolving: {0}")]
    WitnessFails(Collision),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Why the certified value cannot be smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBound {
    /// Graph is not a path, so no 2-partition resolves it.
    NotAPath,
    /// Every partition with fewer blocks was enumerated and rejected.
    ExhaustiveNoK,
}

/// Partition dimension together with a verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCertificate {
    pub value: usize,
    pub lower_bound_reason: LowerBound,
    pub witness: Partition,
}
