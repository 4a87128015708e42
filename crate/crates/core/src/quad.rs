//! The quadratic algebra Q[theta]/(theta^2 - delta).
//!
//! For non-square `delta` this is the quadratic field Q(sqrt(delta)); for a
//! square `delta = r^2` it is the split algebra Q x Q, reached through the
//! two projections theta -> r and theta -> -r. Elements carry their `delta`
//! so that several algebras can be used side by side; combining elements of
//! different algebras is an error in the checked API and a panic in the
//! [`Scalar`] impl.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{fmt_rat, rat_sqrt, Rat};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    re: Rat,
    im: Rat,
    delta: Rat,
}

impl QuadElem {
    pub fn new(re: Rat, im: Rat, delta: Rat) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::Internal("quadratic algebra with delta = 0".into()));
        }
        Ok(Self { re, im, delta })
    }

    pub fn from_rat(re: Rat, delta: &Rat) -> Self {
        Self::new(re, Rat::zero(), delta.clone()).expect("nonzero delta")
    }

    /// The generator theta with theta^2 = delta.
    pub fn theta(delta: &Rat) -> Result<Self> {
        Self::new(Rat::zero(), Rat::one(), delta.clone())
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im, delta: self.delta.clone() }
    }

    /// Nm(a + b theta) = a^2 - b^2 delta.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - &self.im * &self.im * &self.delta
    }

    pub fn trace(&self) -> Rat {
        &self.re + &self.re
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.delta == other.delta {
            Ok(())
        } else {
            Err(Error::DeltaMismatch(fmt_rat(&self.delta), fmt_rat(&other.delta)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { re: &self.re + &other.re, im: &self.im + &other.im, delta: self.delta.clone() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { re: &self.re - &other.re, im: &self.im - &other.im, delta: self.delta.clone() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let re = &self.re * &other.re + &self.im * &other.im * &self.delta;
        let im = &self.re * &other.im + &self.im * &other.re;
        Ok(Self { re, im, delta: self.delta.clone() })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scaled(&n.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.embed(&Rat::one());
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }

    /// Square root of `delta` when the algebra is split.
    pub fn split_root(&self) -> Option<Rat> {
        rat_sqrt(&self.delta)
    }

    /// Images under theta -> r and theta -> -r, for split algebras only.
    pub fn components(&self) -> Option<(Rat, Rat)> {
        let r = self.split_root()?;
        Some((&self.re + &self.im * &r, &self.re - &self.im * &r))
    }

    /// Not a zero divisor.
    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }
}

/// Checked product in Q[theta]/(theta^2 - delta).
pub fn quad_mul(a: &QuadElem, b: &QuadElem) -> Result<QuadElem> {
    a.try_mul(b)
}

impl Scalar for QuadElem {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn zero_like(&self) -> Self {
        Self::from_rat(Rat::zero(), &self.delta)
    }

    fn embed(&self, r: &Rat) -> Self {
        Self::from_rat(r.clone(), &self.delta)
    }

    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn negated(&self) -> Self {
        Self { re: -&self.re, im: -&self.im, delta: self.delta.clone() }
    }

    fn scaled(&self, r: &Rat) -> Self {
        Self { re: &self.re * r, im: &self.im * r, delta: self.delta.clone() }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.delta == other.delta
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{} {} {}*t [t^2={}]",
            fmt_rat(&self.re),
            sign,
            fmt_rat(&self.im.abs()),
            fmt_rat(&self.delta)
        )
    }
}
