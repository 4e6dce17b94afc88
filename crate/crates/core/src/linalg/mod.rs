//! Exact linear algebra over the Gaussian rationals: Hermitian adjacency
//! matrices, elimination rank, characteristic polynomials and inertia.
//!
//! No floating point is used anywhere in this module.

mod charpoly;
mod gaussian;
mod matrix;
mod rank;

pub use charpoly::{char_poly, inertia, CharPoly, SpectralSummary};
pub use gaussian::GaussianRational;
pub use matrix::{hermitian_adjacency, HermitianMatrix};
pub use rank::rank_elimination;

pub(crate) use charpoly::two_paths;
pub(crate) use matrix::IntMatrix;
pub(crate) use rank::int_rank;

use crate::graph::MixedGraph;

/// Inertia of the Hermitian adjacency matrix of `g`.
pub fn spectrum(g: &MixedGraph) -> SpectralSummary {
    let (rank, summary) = two_paths(&IntMatrix::adjacency(g));
    assert!(
        rank == summary.rank && summary.positive + summary.negative == rank,
        "elimination rank {rank} disagrees with characteristic polynomial ({summary:?}) for\n{g}"
    );
    summary
}

pub fn nullity(g: &MixedGraph) -> usize {
    g.order() - int_rank(&IntMatrix::adjacency(g))
}

pub fn rank(g: &MixedGraph) -> usize {
    int_rank(&IntMatrix::adjacency(g))
}
