//! Exact scalars: Gaussian rationals `a + bi` with `a, b ∈ ℚ`, plus the
//! Gaussian-integer rings used by the division-free kernels.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact complex rational number. Components are always kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(GaussianRational { re: &self.re / &d, im: -(&self.im / &d) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -self.im.clone()),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// Commutative ring with possibly-overflowing operations. `None` means the
/// machine representation overflowed and the caller should retry in a wider
/// ring; exact arithmetic types never return `None`.
pub(crate) trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    /// Division known to be exact. Panics if it is not.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn neg(&self) -> Option<Self> {
        Self::zero().sub(self)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Some(self.checked_div(rhs).expect("division by zero"))
    }
}

/// Integer backends for [`GaussInt`].
pub(crate) trait Int: Clone + PartialEq + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    /// Quotient if `self` is divisible by `rhs`, `Some(None)` if not.
    fn div_if_exact(&self, rhs: &Self) -> Option<Option<Self>>;
    fn to_bigint(&self) -> BigInt;
}

impl Int for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn div_if_exact(&self, rhs: &Self) -> Option<Option<Self>> {
        let q = self.checked_div(*rhs)?;
        Some((self.checked_rem(*rhs)? == 0).then_some(q))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn div_if_exact(&self, rhs: &Self) -> Option<Option<Self>> {
        let (q, r) = (self / rhs, self % rhs);
        Some(Zero::is_zero(&r).then_some(q))
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Gaussian integer over a chosen integer backend.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct GaussInt<T> {
    pub re: T,
    pub im: T,
}

impl<T: Int> GaussInt<T> {
    pub fn new(re: i64, im: i64) -> Self {
        GaussInt { re: T::from_i64(re), im: T::from_i64(im) }
    }

    pub fn to_big(&self) -> GaussInt<BigInt> {
        GaussInt { re: self.re.to_bigint(), im: self.im.to_bigint() }
    }
}

impl<T: Int> Ring for GaussInt<T> {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn one() -> Self {
        Self::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(GaussInt { re: self.re.add(&rhs.re)?, im: self.im.add(&rhs.im)? })
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(GaussInt { re: self.re.sub(&rhs.re)?, im: self.im.sub(&rhs.im)? })
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Some(GaussInt { re: self.re.mul(&rhs.re)?, im: T::from_i64(0) });
        }
        let re = self.re.mul(&rhs.re)?.sub(&self.im.mul(&rhs.im)?)?;
        let im = self.re.mul(&rhs.im)?.add(&self.im.mul(&rhs.re)?)?;
        Some(GaussInt { re, im })
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        // (a+bi)/(c+di) = ((ac+bd) + (bc-ad)i) / (c²+d²)
        let (a, b, c, d) = (&self.re, &self.im, &rhs.re, &rhs.im);
        let norm = c.mul(c)?.add(&d.mul(d)?)?;
        let re = a.mul(c)?.add(&b.mul(d)?)?;
        let im = b.mul(c)?.sub(&a.mul(d)?)?;
        let inexact = || panic!("inexact Gaussian-integer division {self:?} / {rhs:?}");
        let re = re.div_if_exact(&norm)?.unwrap_or_else(inexact);
        let im = im.div_if_exact(&norm)?.unwrap_or_else(inexact);
        Some(GaussInt { re, im })
    }
}

impl GaussianRational {
    pub(crate) fn to_gauss_i64(&self) -> Option<GaussInt<i64>> {
        if !self.is_gaussian_integer() {
            return None;
        }
        Some(GaussInt { re: self.re.to_integer().to_i64()?, im: self.im.to_integer().to_i64()? })
    }

    pub(crate) fn to_gauss_big(&self) -> Option<GaussInt<BigInt>> {
        self.is_gaussian_integer()
            .then(|| GaussInt { re: self.re.to_integer(), im: self.im.to_integer() })
    }
}

/// Sign of a real integer as -1, 0, 1.
pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
