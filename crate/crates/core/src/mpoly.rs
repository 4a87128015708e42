//! Sparse polynomials in the four variables `s, t, x, y`, just enough to
//! expand a determinant symbolically.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bivar::BivarPoly;
use crate::rat::Rat;

/// Exponents of `(s, t, x, y)`.
pub type Exponent = [u32; 4];

pub const S: usize = 0;
pub const T: usize = 1;
pub const X: usize = 2;
pub const Y: usize = 3;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponent, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn monomial(c: Rat, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; 4];
        e[v] = 1;
        Self::monomial(Rat::from_integer(1.into()), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponent, c: Rat) {
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// The coefficient of `s^a t^b`, as a polynomial in `x, y`; every
    /// such term must be homogeneous of degree `d` in `x, y`.
    pub fn st_coefficient(&self, a: u32, b: u32, d: usize) -> BivarPoly {
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (e, c) in &self.terms {
            if e[S] == a && e[T] == b {
                assert_eq!((e[X] + e[Y]) as usize, d, "not homogeneous in x, y");
                coeffs[e[Y] as usize] += c;
            }
        }
        BivarPoly::new(coeffs)
    }

    /// Whether any term has the given `s` and `t` exponents.
    pub fn has_st(&self, a: u32, b: u32) -> bool {
        self.terms.keys().any(|e| e[S] == a && e[T] == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn binomial_square() {
        let p = MPoly::var(X).add(&MPoly::var(Y));
        let sq = p.mul(&p).mul(&MPoly::var(S));
        assert_eq!(sq.st_coefficient(1, 0, 2), BivarPoly::from_i64(&[1, 2, 1]));
        assert!(!sq.has_st(0, 1));
        assert!(p.sub(&p).is_zero());
        assert_eq!(MPoly::constant(rat(3)).scale(&rat(0)), MPoly::zero());
    }
}
