use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::gaussian::{sign_of, GaussInt, Int, Ring};
use super::matrix::{HermitianMatrix, IntMatrix};
use super::rank::{int_rank, rank_elimination};

/// Berkowitz's division-free recurrence for `det(λI - A)`. Returns the
/// coefficients highest degree first, or `None` on overflow.
pub(crate) fn berkowitz<R: Ring>(n: usize, a: &[R]) -> Option<Vec<R>> {
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut poly = vec![R::one()];
    for k in 0..n {
        // Leading block A_k (k×k), column S = A[0..k][k], row R = A[k][0..k].
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(R::one());
        toeplitz.push(at(k, k).neg()?);
        let mut w: Vec<R> = (0..k).map(|i| at(i, k).clone()).collect();
        for step in 0..k {
            let mut dot = R::zero();
            for (j, wj) in w.iter().enumerate() {
                dot = dot.add(&at(k, j).mul(wj)?)?;
            }
            toeplitz.push(dot.neg()?);
            if step + 1 < k {
                let mut next = Vec::with_capacity(k);
                for i in 0..k {
                    let mut acc = R::zero();
                    for (j, wj) in w.iter().enumerate() {
                        acc = acc.add(&at(i, j).mul(wj)?)?;
                    }
                    next.push(acc);
                }
                w = next;
            }
        }
        let mut next = Vec::with_capacity(k + 2);
        for i in 0..=k + 1 {
            let mut acc = R::zero();
            for j in 0..=i.min(k) {
                acc = acc.add(&toeplitz[i - j].mul(&poly[j])?)?;
            }
            next.push(acc);
        }
        poly = next;
    }
    Some(poly)
}

/// Monic characteristic polynomial with integer coefficients, lowest degree
/// first: `p(λ) = Σ coeffs[k] λ^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(coeffs.last().is_some_and(|c| *c == BigInt::from(1)), "characteristic polynomials are monic");
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Multiplicity of `λ = 0` as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().position(|c| !Zero::is_zero(c)).expect("monic")
    }

    /// Number of sign changes in the nonzero coefficients.
    pub fn sign_changes(&self) -> usize {
        sign_changes(self.coeffs.iter().map(sign_of))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let one = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                1 if one => write!(f, "λ")?,
                1 => write!(f, "{mag}λ")?,
                _ if one => write!(f, "λ^{k}")?,
                _ => write!(f, "{mag}λ^{k}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Extracts real parts of Berkowitz output (highest first) into lowest-first
/// integers, asserting the imaginary parts vanish.
fn real_coeffs<T: Int>(poly: Vec<GaussInt<T>>) -> Vec<T> {
    let mut out = Vec::with_capacity(poly.len());
    for c in poly.into_iter().rev() {
        assert!(c.im.is_zero(), "characteristic polynomial of a Hermitian matrix has a non-real coefficient");
        out.push(c.re);
    }
    out
}

/// Characteristic polynomial coefficients of an integer matrix, lowest first,
/// in i64 when they fit.
pub(crate) enum IntCoeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl IntCoeffs {
    pub fn signs(&self) -> Vec<i8> {
        match self {
            IntCoeffs::Small(c) => c.iter().map(|v| v.signum() as i8).collect(),
            IntCoeffs::Big(c) => c.iter().map(sign_of).collect(),
        }
    }

    pub fn into_big(self) -> Vec<BigInt> {
        match self {
            IntCoeffs::Small(c) => c.into_iter().map(BigInt::from).collect(),
            IntCoeffs::Big(c) => c,
        }
    }
}

pub(crate) fn int_char_poly(m: &IntMatrix) -> IntCoeffs {
    match berkowitz(m.n, &m.entries) {
        Some(p) => IntCoeffs::Small(real_coeffs(p)),
        None => {
            let wide: Vec<_> = m.entries.iter().map(GaussInt::to_big).collect();
            IntCoeffs::Big(real_coeffs(berkowitz(m.n, &wide).expect("big integers do not overflow")))
        }
    }
}

/// Exact characteristic polynomial `det(λI - H)`.
///
/// Panics if a coefficient is not an integer; that can only happen for
/// matrices whose entries are not Gaussian integers.
pub fn char_poly(h: &HermitianMatrix) -> CharPoly {
    if let Some(m) = IntMatrix::from_hermitian(h) {
        return CharPoly { coeffs: int_char_poly(&m).into_big() };
    }
    let poly = berkowitz(h.order(), h.entries()).expect("exact field arithmetic");
    let coeffs = poly
        .into_iter()
        .rev()
        .map(|c| {
            assert!(c.is_real() && c.re().is_integer(), "non-integral characteristic polynomial coefficient {c}");
            c.re().to_integer()
        })
        .collect();
    CharPoly { coeffs }
}

/// Rank, nullity and inertia indices of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub rank: usize,
    pub nullity: usize,
    /// Number of positive eigenvalues.
    pub positive: usize,
    /// Number of negative eigenvalues.
    pub negative: usize,
}

/// Reads inertia off lowest-first coefficient signs. The polynomial is
/// real-rooted, so Descartes' rule of signs is exact. `positive` and
/// `negative` are counted separately, so `positive + negative = rank` is a
/// genuine consistency check rather than an identity.
pub(crate) fn summary_from_signs(signs: &[i8]) -> SpectralSummary {
    let n = signs.len() - 1;
    let nullity = signs.iter().position(|&s| s != 0).expect("monic");
    let positive = sign_changes(signs[nullity..].iter().copied());
    // Roots of p(-λ) are the negatives of the roots of p.
    let negative = sign_changes(signs.iter().enumerate().skip(nullity).map(|(k, &s)| if k % 2 == 1 { -s } else { s }));
    SpectralSummary { rank: n - nullity, nullity, positive, negative }
}

/// Both spectral routes for an integer adjacency matrix: elimination rank and
/// characteristic-polynomial summary. Callers decide how to treat a mismatch.
pub(crate) fn two_paths(m: &IntMatrix) -> (usize, SpectralSummary) {
    let rank = int_rank(m);
    let summary = summary_from_signs(&int_char_poly(m).signs());
    (rank, summary)
}

/// Inertia from the characteristic polynomial, cross-checked against the
/// elimination rank.
///
/// Panics if the two routes disagree.
pub fn inertia(h: &HermitianMatrix) -> SpectralSummary {
    let p = char_poly(h);
    let signs: Vec<i8> = p.coeffs().iter().map(sign_of).collect();
    let summary = summary_from_signs(&signs);
    let rank = rank_elimination(h);
    assert!(
        rank == summary.rank && summary.positive + summary.negative == rank,
        "elimination rank {rank} disagrees with characteristic polynomial {p} ({summary:?})"
    );
    summary
}
