//! Coordinate arithmetic.
//!
//! Every geometric type in this crate is generic over a [`Scalar`]. Two
//! implementations are provided: `f64` (binary64, the default) and
//! [`Exact`] (arbitrary precision rationals). Geometric predicates only ever
//! compare coordinates that were copied from the input, so both modes decide
//! boundary cases the same way; the rational mode additionally makes volumes
//! and sums exact.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational coordinates.
pub type Exact = BigRational;

pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;

    /// Exact conversion for rationals; identity for `f64`.
    /// Returns `None` for non-finite input.
    fn from_f64(value: f64) -> Option<Self>;

    /// `num / den`, correctly rounded in float mode.
    fn from_ratio(num: u64, den: u64) -> Self;

    fn to_f64(&self) -> f64;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// Total order. Only finite values occur in canonical point sets.
    fn total_cmp(&self, other: &Self) -> Ordering;

    /// Fractional part, mapped into `[0, 1)`.
    fn fract_unit(&self) -> Self;

    fn lt(&self, other: &Self) -> bool {
        self.total_cmp(other) == Ordering::Less
    }

    fn le(&self, other: &Self) -> bool {
        self.total_cmp(other) != Ordering::Greater
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Lossless text form (`p/q`) for exact types; `None` for floats.
    fn exact_repr(&self) -> Option<String> {
        None
    }

    /// True when `self < other` holds beyond rounding error. Used to prune
    /// searches whose partial volumes are multiplied in a different order
    /// than final volumes.
    fn certainly_below(&self, other: &Self) -> bool {
        self.lt(other)
    }
}

/// Relative slack for [`Scalar::certainly_below`] in float mode.
pub const FLOAT_PRUNE_SLACK: f64 = 1e-12;

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_f64(value: f64) -> Option<Self> {
        value.is_finite().then_some(value)
    }

    fn from_ratio(num: u64, den: u64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        // -0.0 and 0.0 are the same coordinate.
        if self == other {
            Ordering::Equal
        } else {
            f64::total_cmp(self, other)
        }
    }

    fn certainly_below(&self, other: &Self) -> bool {
        *self < other * (1.0 - FLOAT_PRUNE_SLACK)
    }

    fn fract_unit(&self) -> Self {
        let f = self - self.floor();
        // tiny negative inputs round up to exactly 1.0
        if f >= 1.0 || f == 0.0 {
            0.0
        } else {
            f
        }
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value)
    }

    fn from_ratio(num: u64, den: u64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn exact_repr(&self) -> Option<String> {
        Some(self.to_string())
    }

    fn fract_unit(&self) -> Self {
        let f = self - self.floor();
        debug_assert!(!f.is_negative());
        f
    }
}

/// Length of the open arc that starts at `start` and runs forward to `end`
/// on the unit circle. Equal endpoints denote the full circle minus a point.
pub fn arc_length<T: Scalar>(start: &T, end: &T) -> T {
    match start.total_cmp(end) {
        Ordering::Equal => T::one(),
        Ordering::Less => end.sub(start),
        Ordering::Greater => T::one().sub(start).add(end),
    }
}

/// Product of the values, multiplied left to right.
pub fn product<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::one(), |acc, v| acc.mul(v))
}
