//! Exact spectral analysis of mixed graphs.
//!
//! A mixed graph is a simple graph in which every edge is either undirected
//! or directed. Its Hermitian adjacency matrix has `1` for undirected edges
//! and `±i` for directed ones. This crate computes rank, nullity and inertia
//! of that matrix in exact arithmetic and relates them to the matching
//! number `m`, the cyclomatic number `c` and the order `n` of the underlying
//! graph: `n - 2m - c ≤ η ≤ n - 2m + 2c`, and `η` never equals
//! `n - 2m + 2c - 1`.
//!
//! The [`verify`] module enumerates small graphs with all their orientations
//! and checks these relations exhaustively.

pub mod characterization;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeState, MixedEdge, MixedGraph, UnderlyingGraph, VertexId};
pub use linalg::{SpectralSummary, spectrum};
