//! The exterior algebra on `H^1(J x J)`: `4n` generators
//! `dx_1 .. dx_2n, dy_1 .. dy_2n` with coefficients in any [`Scalar`].
//!
//! A monomial is a bit mask: `dx_i` is bit `i - 1` and `dy_i` is bit
//! `2n + i - 1`, so the canonical order of a monomial is increasing bit order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::quad::QuadElem;
use crate::rat::{fmt_rat, parse_rat, Rat};
use crate::scalar::Scalar;

/// Largest supported `dim J`.
pub const MAX_N: usize = 6;

/// A homogeneous element of the exterior algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiForm<C = Rat> {
    n: usize,
    degree: usize,
    terms: BTreeMap<u32, C>,
}

/// Sign of `m1 ^ m2` relative to the sorted monomial `m1 | m2`, or `None`
/// when the monomials share a generator.
pub fn merge_sign(m1: u32, m2: u32) -> Option<i32> {
    if m1 & m2 != 0 {
        return None;
    }
    let mut inversions = 0;
    let mut rest = m2;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (m1 >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Mask of `dx_i` (1-based).
pub fn dx_bit(n: usize, i: usize) -> u32 {
    assert!(i >= 1 && i <= 2 * n, "dx{i} out of range");
    1 << (i - 1)
}

/// Mask of `dy_i` (1-based).
pub fn dy_bit(n: usize, i: usize) -> u32 {
    assert!(i >= 1 && i <= 2 * n, "dy{i} out of range");
    1 << (2 * n + i - 1)
}

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n))
    }
}

impl<C: Scalar> MultiForm<C> {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self { n, degree, terms: BTreeMap::new() }
    }

    /// Builds a form from `(mask, coefficient)` pairs; all masks must have
    /// the same number of generators.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u32, C)>) -> Result<Self> {
        check_n(n)?;
        let mut out: Option<Self> = None;
        for (mask, c) in terms {
            assert!(mask >> (4 * n) == 0, "monomial outside the generators");
            let degree = mask.count_ones() as usize;
            let f = out.get_or_insert_with(|| Self::zero(n, degree));
            if f.degree != degree {
                return Err(Error::MixedDegree);
            }
            f.add_term(mask, c);
        }
        out.ok_or(Error::ZeroInput)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u32, c: C) {
        if c.vanishes() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(existing) => {
                *existing = existing.plus(&c);
                if existing.vanishes() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    /// The stored coefficient of a sorted monomial, if any (`None` = 0).
    pub fn coeff(&self, mask: u32) -> Option<&C> {
        self.terms.get(&mask)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::MixedDegree);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            out.add_term(*m, c.times(k));
        }
        out
    }

    pub fn scale_rat(&self, k: &Rat) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            out.add_term(*m, c.scaled(k));
        }
        out
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        Self {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.n, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(sign) = merge_sign(*m1, *m2) {
                    let c = c1.times(c2);
                    out.add_term(m1 | m2, if sign > 0 { c } else { c.negated() });
                }
            }
        }
        Ok(out)
    }

    /// `self ^ self ^ ... ^ self` (`k` factors), with `one` the unit of the
    /// coefficient domain.
    pub fn pow(&self, k: usize, one: &C) -> Self {
        let mut acc = Self::from_terms(self.n, [(0u32, one.clone())]).expect("n checked at construction");
        for _ in 0..k {
            acc = acc.wedge(self).expect("same n");
        }
        acc
    }
}

impl MultiForm<Rat> {
    pub fn dx(n: usize, i: usize) -> Self {
        Self::from_terms(n, [(dx_bit(n, i), Rat::one())]).expect("valid n")
    }

    pub fn dy(n: usize, i: usize) -> Self {
        Self::from_terms(n, [(dy_bit(n, i), Rat::one())]).expect("valid n")
    }

    /// The constant form `c` (degree zero).
    pub fn constant(n: usize, c: Rat) -> Self {
        let mut f = Self::zero(n, 0);
        f.add_term(0, c);
        f
    }

    /// `omega_1 = sum_k dx_{2k-1} ^ dx_{2k}`.
    pub fn omega1(n: usize) -> Self {
        Self::from_terms(n, (1..=n).map(|k| (dx_bit(n, 2 * k - 1) | dx_bit(n, 2 * k), Rat::one())))
            .expect("valid n")
    }

    /// `omega_2 = sum_k dy_{2k-1} ^ dy_{2k}`.
    pub fn omega2(n: usize) -> Self {
        Self::from_terms(n, (1..=n).map(|k| (dy_bit(n, 2 * k - 1) | dy_bit(n, 2 * k), Rat::one())))
            .expect("valid n")
    }

    /// `omega_sigma = sum_k dx_{2k-1} ^ dy_{2k} - dx_{2k} ^ dy_{2k-1}`.
    pub fn omega_sigma(n: usize) -> Self {
        let mut terms = Vec::new();
        for k in 1..=n {
            terms.push((dx_bit(n, 2 * k - 1) | dy_bit(n, 2 * k), Rat::one()));
            // dx_{2k} < dy_{2k-1} in the canonical order, so no reordering sign
            terms.push((dx_bit(n, 2 * k) | dy_bit(n, 2 * k - 1), -Rat::one()));
        }
        Self::from_terms(n, terms).expect("valid n")
    }

    /// Coefficient as a rational, zero if absent.
    pub fn coeff_rat(&self, mask: u32) -> Rat {
        self.coeff(mask).cloned().unwrap_or_else(Rat::zero)
    }

    /// The same form over the quadratic algebra of `like`.
    pub fn promote(&self, like: &QuadElem) -> MultiForm<QuadElem> {
        MultiForm {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, like.embed(c))).collect(),
        }
    }

    /// Pullback along `m = [[p, q], [r, s]]` acting on `J x J`.
    pub fn pullback(&self, m: &[[Rat; 2]; 2]) -> Self {
        LinearMap1::from_matrix(self.n, m).apply(self)
    }

    /// Parses a sum of wedge products of generators (`dx1`, `dy3`), the
    /// named classes `w1`, `w2`, `ws`, and rational constants, joined by
    /// `^` or `*`, e.g. `"dx1^dy2 - dx2^dy1"` or `"1/2*w1^w1 + ws^ws"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        check_n(n)?;
        let bad = || Error::Parse(s.to_string());
        let mut acc: Option<Self> = None;
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, rest[1..].trim_start()),
                b'+' => (false, rest[1..].trim_start()),
                _ if acc.is_none() => (false, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = body[..end].trim();
            if term.is_empty() {
                return Err(bad());
            }
            let mut prod = Self::constant(n, Rat::one());
            for factor in term.split(['^', '*']) {
                let factor = factor.trim();
                let f = match factor {
                    "w1" => Self::omega1(n),
                    "w2" => Self::omega2(n),
                    "ws" => Self::omega_sigma(n),
                    _ if factor.starts_with("dx") || factor.starts_with("dy") => {
                        let i: usize = factor[2..].parse().map_err(|_| bad())?;
                        if i == 0 || i > 2 * n {
                            return Err(bad());
                        }
                        if factor.starts_with("dx") {
                            Self::dx(n, i)
                        } else {
                            Self::dy(n, i)
                        }
                    }
                    _ => Self::constant(n, parse_rat(factor).map_err(|_| bad())?),
                };
                prod = prod.wedge(&f)?;
            }
            if neg {
                prod = prod.neg();
            }
            acc = Some(match acc {
                None => prod,
                Some(a) => a.add(&prod)?,
            });
            rest = body[end..].trim_start();
        }
        acc.ok_or_else(bad)
    }
}

impl MultiForm<QuadElem> {
    /// The rational forms `(u, v)` with `self = u + theta * v`.
    pub fn split_parts(&self) -> (MultiForm<Rat>, MultiForm<Rat>) {
        let mut re = MultiForm::zero(self.n, self.degree);
        let mut im = MultiForm::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            re.add_term(*m, c.re().clone());
            im.add_term(*m, c.im().clone());
        }
        (re, im)
    }
}

/// `sum_i coeffs[i] * basis[i]` for rational basis forms and arbitrary
/// coefficients.
pub fn combine<C: Scalar>(coeffs: &[C], basis: &[MultiForm<Rat>]) -> MultiForm<C> {
    assert_eq!(coeffs.len(), basis.len());
    let first = &basis[0];
    let mut out = MultiForm::zero(first.n, first.degree);
    for (c, f) in coeffs.iter().zip(basis) {
        assert_eq!((f.n, f.degree), (first.n, first.degree));
        for (m, r) in &f.terms {
            out.add_term(*m, c.scaled(r));
        }
    }
    out
}

/// Rank over Q of a family of forms of one degree.
pub fn dim_span(forms: &[MultiForm<Rat>]) -> Result<usize> {
    let Some(first) = forms.first() else {
        return Ok(0);
    };
    let mut masks = std::collections::BTreeSet::new();
    for f in forms {
        if f.n != first.n {
            return Err(Error::ArityMismatch(first.n, f.n));
        }
        if f.degree != first.degree {
            return Err(Error::DegreeMismatch(first.degree, f.degree));
        }
        masks.extend(f.terms.keys().copied());
    }
    let masks: Vec<u32> = masks.into_iter().collect();
    let rows: Vec<Vec<Rat>> = forms.iter().map(|f| masks.iter().map(|m| f.coeff_rat(*m)).collect()).collect();
    Ok(linalg::rank(&rows))
}

/// A linear map on degree-one forms, extended to the exterior algebra as an
/// algebra homomorphism.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearMap1 {
    n: usize,
    images: Vec<MultiForm<Rat>>,
}

impl LinearMap1 {
    /// `images[g]` is the image of generator bit `g`.
    pub fn new(n: usize, images: Vec<MultiForm<Rat>>) -> Result<Self> {
        check_n(n)?;
        if images.len() != 4 * n {
            return Err(Error::ArityMismatch(4 * n, images.len()));
        }
        for im in &images {
            if im.n != n {
                return Err(Error::ArityMismatch(n, im.n));
            }
            if !im.is_zero() && im.degree != 1 {
                return Err(Error::DegreeMismatch(1, im.degree));
            }
        }
        Ok(Self { n, images })
    }

    /// Pullback along `(x, y) -> (p x + q y, r x + s y)` for
    /// `m = [[p, q], [r, s]]`: `dx_i -> p dx_i + q dy_i`,
    /// `dy_i -> r dx_i + s dy_i`.
    pub fn from_matrix(n: usize, m: &[[Rat; 2]; 2]) -> Self {
        let lin = |i: usize, a: &Rat, b: &Rat| {
            MultiForm::from_terms(n, [(dx_bit(n, i), a.clone()), (dy_bit(n, i), b.clone())])
                .unwrap_or_else(|_| MultiForm::zero(n, 1))
        };
        let mut images = Vec::with_capacity(4 * n);
        for i in 1..=2 * n {
            images.push(lin(i, &m[0][0], &m[0][1]));
        }
        for i in 1..=2 * n {
            images.push(lin(i, &m[1][0], &m[1][1]));
        }
        Self { n, images }
    }

    /// The map on `H^1(J x J)` induced by a map on `H^1(J)` sending
    /// `dt_i -> a dx_i + b dy_i`, as used for `sigma*` and `delta*`.
    /// The result is a map from forms on `J` (`2n` generators `dt_i`,
    /// stored as the `dx` bits of an `n`-form) to forms on `J x J`.
    pub fn from_diagonal(n: usize, a: &Rat, b: &Rat) -> Self {
        let mut images: Vec<MultiForm<Rat>> = (1..=2 * n)
            .map(|i| {
                MultiForm::from_terms(n, [(dx_bit(n, i), a.clone()), (dy_bit(n, i), b.clone())])
                    .unwrap_or_else(|_| MultiForm::zero(n, 1))
            })
            .collect();
        images.extend((0..2 * n).map(|_| MultiForm::zero(n, 1)));
        Self { n, images }
    }

    pub fn apply<C: Scalar>(&self, form: &MultiForm<C>) -> MultiForm<C> {
        assert_eq!(form.n, self.n, "arity mismatch in pullback");
        let mut out = MultiForm::zero(self.n, form.degree);
        let mut cache: BTreeMap<u32, MultiForm<Rat>> = BTreeMap::new();
        for (mask, c) in &form.terms {
            let image = cache.entry(*mask).or_insert_with(|| {
                let mut acc = MultiForm::constant(self.n, Rat::one());
                let mut rest = *mask;
                while rest != 0 {
                    let g = rest.trailing_zeros() as usize;
                    acc = acc.wedge(&self.images[g]).expect("same n");
                    rest &= rest - 1;
                }
                acc
            });
            for (m, r) in &image.terms {
                out.add_term(*m, c.scaled(r));
            }
        }
        out
    }
}

fn generator_name(n: usize, bit: u32) -> String {
    let b = bit as usize;
    if b < 2 * n {
        format!("dx{}", b + 1)
    } else {
        format!("dy{}", b - 2 * n + 1)
    }
}

impl fmt::Display for MultiForm<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mask, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let gens: Vec<String> =
                (0..32).filter(|b| mask >> b & 1 == 1).map(|b| generator_name(self.n, b)).collect();
            if gens.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", gens.join("^"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), gens.join("^"))?;
            }
        }
        Ok(())
    }
}
