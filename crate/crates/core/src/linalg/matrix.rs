use crate::error::{Error, Result};
use crate::graph::{EdgeState, MixedGraph};

use super::gaussian::{GaussInt, GaussianRational};

/// Square matrix over the Gaussian rationals equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl HermitianMatrix {
    /// Builds a matrix from rows, rejecting input that is not square or not
    /// Hermitian.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        let m = HermitianMatrix { n, entries };
        for k in 0..n {
            for l in k..n {
                if *m.get(k, l) != m.get(l, k).conj() {
                    return Err(Error::InvalidParameter(format!("entry ({k},{l}) breaks Hermitian symmetry")));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> &GaussianRational {
        &self.entries[k * self.n + l]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussianRational]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn conj(&self) -> Self {
        HermitianMatrix { n: self.n, entries: self.entries.iter().map(GaussianRational::conj).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|i| self.entries[(i % n) * n + i / n].clone()).collect();
        HermitianMatrix { n, entries }
    }

    /// Rows and columns `keep` (in the given order).
    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let entries = keep
            .iter()
            .flat_map(|&k| keep.iter().map(move |&l| (k, l)))
            .map(|(k, l)| self.get(k, l).clone())
            .collect();
        HermitianMatrix { n: keep.len(), entries }
    }

    pub(crate) fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }
}

/// Hermitian adjacency matrix: `1` for an undirected edge, `i` at `(k, l)`
/// for an edge directed `k -> l` and `-i` at `(l, k)`, `0` elsewhere.
pub fn hermitian_adjacency(g: &MixedGraph) -> HermitianMatrix {
    let n = g.order();
    let mut entries = vec![GaussianRational::zero(); n * n];
    for e in g.edges() {
        let (forward, backward) = edge_entries(e.state);
        entries[e.u * n + e.v] = GaussianRational::from_integers(forward.0, forward.1);
        entries[e.v * n + e.u] = GaussianRational::from_integers(backward.0, backward.1);
    }
    HermitianMatrix { n, entries }
}

/// `(h_uv, h_vu)` as `(re, im)` pairs for an edge stored as `u < v`.
fn edge_entries(state: EdgeState) -> ((i64, i64), (i64, i64)) {
    match state {
        EdgeState::Undirected => ((1, 0), (1, 0)),
        EdgeState::Forward => ((0, 1), (0, -1)),
        EdgeState::Backward => ((0, -1), (0, 1)),
    }
}

/// Dense Gaussian-integer copy of the adjacency matrix for the fast kernels.
#[derive(Debug, Clone)]
pub(crate) struct IntMatrix {
    pub n: usize,
    pub entries: Vec<GaussInt<i64>>,
}

impl IntMatrix {
    pub fn adjacency(g: &MixedGraph) -> Self {
        let n = g.order();
        let mut entries = vec![GaussInt::new(0, 0); n * n];
        for e in g.edges() {
            let (f, b) = edge_entries(e.state);
            entries[e.u * n + e.v] = GaussInt::new(f.0, f.1);
            entries[e.v * n + e.u] = GaussInt::new(b.0, b.1);
        }
        IntMatrix { n, entries }
    }

    pub fn from_hermitian(h: &HermitianMatrix) -> Option<Self> {
        let entries = h.entries().iter().map(GaussianRational::to_gauss_i64).collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { n: h.order(), entries })
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let entries = keep
            .iter()
            .flat_map(|&k| keep.iter().map(move |&l| (k, l)))
            .map(|(k, l)| self.entries[k * self.n + l].clone())
            .collect();
        IntMatrix { n: keep.len(), entries }
    }

    /// Drops row and column `x`.
    pub fn without(&self, x: usize) -> Self {
        let keep: Vec<_> = (0..self.n).filter(|&v| v != x).collect();
        self.principal_submatrix(&keep)
    }
}
