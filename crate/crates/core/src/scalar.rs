//! Scalar arithmetic with two equality regimes.
//!
//! Every structure in this crate is generic over a [`Scalar`]: exact
//! rationals for finite/structural work, `f64` for numeric probes of
//! matrix carriers. The regime is part of the type, so exact and
//! approximate assertions cannot be mixed by accident.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero as _};

/// Exact rational scalar.
pub type Rat = Ratio<i64>;

/// Field operations plus a zero test that respects the carrier's
/// equality regime. Exact scalars ignore the tolerance argument;
/// floating scalars compare magnitudes against it.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Magnitude as `f64`, for report residuals only; never used to
    /// decide pass/fail in the exact regime.
    fn abs_f64(&self) -> f64;
    fn is_zero_within(&self, tol: f64) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Ratio::from_integer(0)
    }
    fn one() -> Self {
        Ratio::new(1, 1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs_f64(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs_f64(&self) -> f64 {
        self.abs()
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
    fn is_exact() -> bool {
        false
    }
}

/// Componentwise sum of two vectors.
pub fn vec_add<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
}

/// Componentwise difference `u - v`.
pub fn vec_sub<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.sub(b)).collect()
}

pub fn vec_neg<S: Scalar>(u: &[S]) -> Vec<S> {
    u.iter().map(Scalar::neg).collect()
}

pub fn vec_zero<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::zero(); n]
}

/// Largest entry magnitude, used as a residual in reports.
pub fn vec_max_abs<S: Scalar>(u: &[S]) -> f64 {
    u.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
}

pub fn vec_is_zero_within<S: Scalar>(u: &[S], tol: f64) -> bool {
    u.iter().all(|x| x.is_zero_within(tol))
}

/// Renders a vector for witness strings: `[a, b, c]`.
pub fn vec_display<S: Scalar>(u: &[S]) -> String {
    let parts: Vec<String> = u.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
