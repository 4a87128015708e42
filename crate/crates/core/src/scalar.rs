//! Coefficient domains: Q itself and one quadratic algebra at a time.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::rat::Rat;

/// Exact commutative coefficients.
///
/// `zero_like` and `embed` produce elements in the same domain as `self`,
/// which matters for [`crate::QuadElem`], whose elements carry their
/// defining relation.
pub trait Scalar: Clone + PartialEq + Debug {
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn embed(&self, r: &Rat) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rat) -> Self;
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
    fn try_inverse(&self) -> Option<Self>;
}

impl Scalar for Rat {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        Rat::zero()
    }

    fn embed(&self, r: &Rat) -> Self {
        r.clone()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, r: &Rat) -> Self {
        self * r
    }

    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| Rat::one() / self)
    }
}
