//! Minimal ring interface shared by scalars, polynomials and operators.

use crate::scalar::Scalar;
use num_traits::{One, Zero};

/// An associative unital ring that is also a vector space over [`Scalar`].
///
/// Zero and one are produced from an existing value so that types carrying
/// a context (for instance a variable count) can reproduce it.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    /// Exact quotient when the ring supports it and the division is exact.
    fn div_exact(&self, _d: &Self) -> Option<Self> {
        None
    }
}

/// A commutative ring usable as a coefficient domain without extra context.
pub trait Coeff: Ring {
    fn constant(c: Scalar) -> Self;
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self * c
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

impl Coeff for Scalar {
    fn constant(c: Scalar) -> Self {
        c
    }
}
