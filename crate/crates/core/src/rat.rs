//! Exact rationals and the small integer helpers the rest of the crate leans on.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parses `"p/q"` or `"p"` with an optional leading minus.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str, allow_sign: bool| {
        let digits = if allow_sign { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

/// Prints as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a non-negative rational, if it is a square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

pub fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector maps to zeros.
pub fn primitive_integer(xs: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(xs);
    let ints: Vec<BigInt> = xs.iter().map(|x| (x * int_rat(&den)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()).map(|x| x.sign()) {
        Some(Sign::Minus) => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.iter().map(|x| x / &g * &sign).collect()
}

/// Same as [`primitive_integer`] but returned as rationals.
pub fn primitive_rat(xs: &[Rat]) -> Vec<Rat> {
    primitive_integer(xs).iter().map(int_rat).collect()
}

/// True when `xs` and `ys` span the same line (both nonzero) or are both zero.
pub fn proportional(xs: &[Rat], ys: &[Rat]) -> bool {
    xs.len() == ys.len() && primitive_integer(xs) == primitive_integer(ys)
}

/// Squarefree integer `s` with `q = s * r^2` for some rational `r`.
pub fn squarefree_part(q: &Rat) -> Result<BigInt> {
    assert!(!q.is_zero(), "squarefree part of zero");
    // q = n/d ~ n*d modulo squares
    let m: BigInt = q.numer() * q.denom();
    let mut out = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in crate::hilbert::factor(&m.abs())? {
        if e % 2 == 1 {
            out *= p;
        }
    }
    Ok(out)
}

pub fn is_square_rat(q: &Rat) -> bool {
    rat_sqrt(q).is_some()
}

pub fn gcd_all(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

pub fn to_i64(r: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}
