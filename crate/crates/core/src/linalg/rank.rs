use num_bigint::BigInt;

use super::gaussian::{GaussInt, Ring};
use super::matrix::{HermitianMatrix, IntMatrix};

/// Fraction-free (Bareiss) row reduction to echelon form. The pivot in each
/// column is the first row, in order, with a nonzero entry. Every
/// intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact in any integral domain.
///
/// Returns `None` if the ring overflowed.
pub(crate) fn bareiss_rank<R: Ring>(rows: usize, cols: usize, mut m: Vec<R>) -> Option<usize> {
    let mut rank = 0;
    let mut prev = R::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for c in 0..cols {
                m.swap(p * cols + c, rank * cols + c);
            }
        }
        let pivot = m[rank * cols + col].clone();
        for r in rank + 1..rows {
            let factor = m[r * cols + col].clone();
            for c in col + 1..cols {
                let lhs = pivot.mul(&m[r * cols + c])?;
                let rhs = factor.mul(&m[rank * cols + c])?;
                m[r * cols + c] = lhs.sub(&rhs)?.div_exact(&prev)?;
            }
            m[r * cols + col] = R::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

pub(crate) fn int_rank(m: &IntMatrix) -> usize {
    bareiss_rank(m.n, m.n, m.entries.clone()).unwrap_or_else(|| {
        let wide: Vec<GaussInt<BigInt>> = m.entries.iter().map(GaussInt::to_big).collect();
        bareiss_rank(m.n, m.n, wide).expect("big integers do not overflow")
    })
}

/// Exact rank over the Gaussian rationals by elimination.
///
/// Adjacency matrices have Gaussian-integer entries; those are reduced in
/// checked 64-bit arithmetic and retried with big integers on overflow.
/// Other matrices are eliminated directly in [`GaussianRational`]s.
///
/// [`GaussianRational`]: super::GaussianRational
pub fn rank_elimination(h: &HermitianMatrix) -> usize {
    if let Some(m) = IntMatrix::from_hermitian(h) {
        return int_rank(&m);
    }
    let n = h.order();
    if let Some(wide) = h.entries().iter().map(|z| z.to_gauss_big()).collect::<Option<Vec<_>>>() {
        return bareiss_rank(n, n, wide).expect("big integers do not overflow");
    }
    bareiss_rank(n, n, h.entries().to_vec()).expect("exact field arithmetic")
}
