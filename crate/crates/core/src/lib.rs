//! Chain cycles and their resolving invariants.
//!
//! Builds chains of even or odd cycles glued at (near-)antipodal vertices,
//! computes partition dimension and strong metric dimension exactly, and
//! checks the closed-form constructions for both families against brute force.

pub mod chain;
pub mod cli;
pub mod corpus;
pub mod graph;
pub mod instance;
pub mod io;
pub mod report;
pub mod resolving;
pub mod strong;
pub mod tables;
pub mod verify;

pub use chain::{ChainCycle, ChainError, LabeledGraph, Parity};
pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
