//! Coordinates on the Hodge rings `B^1(J x J)` and `B^2(J x J)`.
//!
//! `B^1` has basis `omega_1, omega_sigma, omega_2`; `B^2` has basis
//! `omega_1^2, omega_1 omega_2, omega_2^2, omega_1 omega_sigma,
//! omega_2 omega_sigma, omega_sigma^2`, in that order.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{combine, MultiForm};
use crate::linalg;
use crate::rat::{fmt_rat, parse_rat_list, primitive_rat, rat, ratio, Rat};
use crate::scalar::Scalar;

/// `a omega_1 + b omega_sigma + c omega_2`.
#[derive(Clone, PartialEq, Debug)]
pub struct B1Class<C = Rat> {
    pub a: C,
    pub b: C,
    pub c: C,
}

/// `x0 w1^2 + x1 w1 w2 + x2 w2^2 + x3 w1 ws + x4 w2 ws + x5 ws^2`.
#[derive(Clone, PartialEq, Debug)]
pub struct B2Class<C = Rat> {
    pub x: [C; 6],
}

pub type GlMatrix = [[Rat; 2]; 2];

impl<C: Scalar> B1Class<C> {
    pub fn new(a: C, b: C, c: C) -> Self {
        Self { a, b, c }
    }

    pub fn coords(&self) -> [C; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.a.vanishes() && self.b.vanishes() && self.c.vanishes()
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::new(self.a.times(k), self.b.times(k), self.c.times(k))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.a.plus(&o.a), self.b.plus(&o.b), self.c.plus(&o.c))
    }

    /// The product of two degree-two classes in `B^2`.
    pub fn mul(&self, o: &Self) -> B2Class<C> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let (p, q, r) = (&o.a, &o.b, &o.c);
        B2Class {
            x: [
                a.times(p),
                a.times(r).plus(&c.times(p)),
                c.times(r),
                a.times(q).plus(&b.times(p)),
                c.times(q).plus(&b.times(r)),
                b.times(q),
            ],
        }
    }

    /// `(a^2, 2ac, c^2, 2ab, 2bc, b^2)`.
    pub fn square(&self) -> B2Class<C> {
        self.mul(self)
    }

    pub fn to_form(&self, n: usize) -> MultiForm<C> {
        combine(&self.coords(), &b1_basis(n))
    }

    /// `b^2 - ac`.
    pub fn conic_c2_value(&self) -> C {
        self.b.times(&self.b).minus(&self.a.times(&self.c))
    }
}

impl B1Class<Rat> {
    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        Self::new(rat(a), rat(b), rat(c))
    }
}

impl<C: Scalar> B2Class<C> {
    pub fn new(x: [C; 6]) -> Self {
        Self { x }
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(Scalar::vanishes)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i].plus(&o.x[i])) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i].minus(&o.x[i])) }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i].times(k)) }
    }

    pub fn scale_rat(&self, k: &Rat) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i].scaled(k)) }
    }

    pub fn to_form(&self, n: usize) -> MultiForm<C> {
        combine(&self.x, &b2_basis(n))
    }
}

impl B2Class<Rat> {
    pub fn from_i64(x: [i64; 6]) -> Self {
        Self { x: x.map(rat) }
    }

    pub fn zero() -> Self {
        Self::from_i64([0; 6])
    }

    pub fn to_vec(&self) -> Vec<Rat> {
        self.x.to_vec()
    }

    pub fn from_slice(v: &[Rat]) -> Self {
        Self { x: std::array::from_fn(|i| v[i].clone()) }
    }

    /// Primitive integral representative of the projective point.
    pub fn primitive(&self) -> Self {
        Self::from_slice(&primitive_rat(&self.x))
    }

    /// Projective equality (both zero, or proportional).
    pub fn proportional(&self, o: &Self) -> bool {
        crate::rat::proportional(&self.x, &o.x)
    }
}

/// `omega_1, omega_sigma, omega_2` on `J x J` with `dim J = n`.
pub fn b1_basis(n: usize) -> [MultiForm; 3] {
    [MultiForm::omega1(n), MultiForm::omega_sigma(n), MultiForm::omega2(n)]
}

/// The six products spanning `B^2`, in coordinate order.
pub fn b2_basis(n: usize) -> [MultiForm; 6] {
    let [w1, ws, w2] = b1_basis(n);
    let p = |a: &MultiForm, b: &MultiForm| a.wedge(b).expect("same n");
    [p(&w1, &w1), p(&w1, &w2), p(&w2, &w2), p(&w1, &ws), p(&w2, &ws), p(&ws, &ws)]
}

pub fn b1_to_form(theta: &B1Class, n: usize) -> MultiForm {
    theta.to_form(n)
}

pub fn b2_to_form(c: &B2Class) -> MultiForm {
    c.to_form(2)
}

/// Coordinates of a 4-form in the basis of `B^2`.
pub fn form_to_b2(omega: &MultiForm) -> Result<B2Class> {
    if omega.degree() != 4 && !omega.is_zero() {
        return Err(Error::NotInB2);
    }
    let basis = b2_basis(omega.n());
    let mut masks: Vec<u32> = basis.iter().flat_map(|f| f.terms().map(|(m, _)| m)).collect();
    masks.extend(omega.terms().map(|(m, _)| m));
    masks.sort_unstable();
    masks.dedup();
    // one equation per monomial: sum_i x_i basis_i[m] = omega[m]
    let rows: Vec<Vec<Rat>> = masks.iter().map(|m| basis.iter().map(|f| f.coeff_rat(*m)).collect()).collect();
    let rhs: Vec<Rat> = masks.iter().map(|m| omega.coeff_rat(*m)).collect();
    let sol = linalg::solve_affine(&rows, &rhs, 6).ok_or(Error::NotInB2)?;
    debug_assert!(sol.directions.is_empty(), "basis of B^2 is independent");
    Ok(B2Class::from_slice(&sol.particular))
}

/// Sign relating the interleaved volume `dx_1 dy_1 dx_2 dy_2 ... dx_2n dy_2n`
/// to the sorted monomial `dx_1 ... dx_2n dy_1 ... dy_2n`.
pub fn volume_sign(n: usize) -> Rat {
    if n.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// The Pfaffian: `theta^(2n) = (2n)! Pfaff(theta) vol`.
pub fn pfaffian(theta: &B1Class, n: usize) -> Result<Rat> {
    if !(1..=crate::forms::MAX_N).contains(&n) {
        return Err(Error::DimensionOutOfRange(n));
    }
    let top = theta.to_form(n).pow(2 * n, &Rat::one());
    let full = (1u32 << (4 * n)) - 1;
    let fact = (1..=2 * n as i64).fold(rat(1), |acc, k| acc * rat(k));
    Ok(top.coeff_rat(full) * volume_sign(n) / fact)
}

fn det2(g: &GlMatrix) -> Rat {
    &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0]
}

/// `g . theta = (g^T)^* theta`.
pub fn gl2_act_b1(g: &GlMatrix, theta: &B1Class) -> Result<B1Class> {
    if det2(g).is_zero() {
        return Err(Error::Singular);
    }
    Ok(gl2_act_b1_any(g, theta))
}

fn gl2_images(g: &GlMatrix) -> [B1Class; 3] {
    let [[p, q], [r, s]] = g;
    let two = rat(2);
    [
        B1Class::new(p * p, p * r, r * r),
        B1Class::new(&two * p * q, p * s + q * r, &two * r * s),
        B1Class::new(q * q, q * s, s * s),
    ]
}

fn gl2_act_b1_any<C: Scalar>(g: &GlMatrix, theta: &B1Class<C>) -> B1Class<C> {
    let [i1, is, i2] = gl2_images(g);
    let zero = theta.a.zero_like();
    let mut out = B1Class::new(zero.clone(), zero.clone(), zero);
    for (coef, img) in [(&theta.a, &i1), (&theta.b, &is), (&theta.c, &i2)] {
        out = out.add(&B1Class::new(coef.scaled(&img.a), coef.scaled(&img.b), coef.scaled(&img.c)));
    }
    out
}

/// The induced action on `B^2`.
pub fn gl2_act_b2(g: &GlMatrix, c: &B2Class) -> Result<B2Class> {
    if det2(g).is_zero() {
        return Err(Error::Singular);
    }
    let [i1, is, i2] = gl2_images(g);
    let prods = [i1.mul(&i1), i1.mul(&i2), i2.mul(&i2), i1.mul(&is), i2.mul(&is), is.mul(&is)];
    let mut out = B2Class::zero();
    for (x, p) in c.x.iter().zip(&prods) {
        out = out.add(&p.scale(x));
    }
    Ok(out)
}

/// `Omega = 4 omega_1 omega_2 - omega_sigma^2`, the GL_2-invariant line.
pub fn omega_invariant() -> B2Class {
    B2Class::from_i64([0, 4, 0, 0, 0, -1])
}

/// Membership in the five-dimensional complement `V_4` spanned by
/// `w1^2, w1 ws, 2 w1 w2 + ws^2, w2 ws, w2^2`, i.e. `x1 = 2 x5`.
pub fn in_v4(c: &B2Class) -> bool {
    c.x[1] == &c.x[5] * rat(2)
}

pub fn conic_c2_value(theta: &B1Class) -> Rat {
    theta.conic_c2_value()
}

/// The pole of the line `pq` with respect to `C_2 = {b^2 = ac}`: the
/// intersection of the tangent lines at `p` and `q`.
pub fn tangent_intersection<C: Scalar>(p: &B1Class<C>, q: &B1Class<C>) -> Result<B1Class<C>> {
    if !p.conic_c2_value().vanishes() || !q.conic_c2_value().vanishes() {
        return Err(Error::NotOnConic);
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::DegenerateInput);
    }
    let half = ratio(1, 2);
    // tangent line at (a, b, c): (-c/2, b, -a/2)
    let tangent = |v: &B1Class<C>| [v.c.scaled(&-&half), v.b.clone(), v.a.scaled(&-&half)];
    let (l, m) = (tangent(p), tangent(q));
    let x = B1Class::new(
        l[1].times(&m[2]).minus(&l[2].times(&m[1])),
        l[2].times(&m[0]).minus(&l[0].times(&m[2])),
        l[0].times(&m[1]).minus(&l[1].times(&m[0])),
    );
    if x.is_zero() {
        return Err(Error::DegenerateInput);
    }
    Ok(x)
}

fn parse_exact<const N: usize>(s: &str) -> Result<[Rat; N]> {
    let v = parse_rat_list(s)?;
    v.try_into().map_err(|_| Error::Parse(s.to_string()))
}

impl FromStr for B1Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [a, b, c] = parse_exact::<3>(s)?;
        Ok(Self::new(a, b, c))
    }
}

impl FromStr for B2Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self { x: parse_exact::<6>(s)? })
    }
}

impl fmt::Display for B1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", fmt_rat(&self.a), fmt_rat(&self.b), fmt_rat(&self.c))
    }
}

impl fmt::Display for B2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.x.iter().map(fmt_rat).collect();
        write!(f, "{}", parts.join(","))
    }
}
