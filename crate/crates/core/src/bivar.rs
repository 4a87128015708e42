//! Homogeneous polynomials in two variables.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{fmt_rat, int_rat, primitive_integer, rat, Rat};

/// `sum_i coeffs[i] * x^(d-i) * y^i` with `d = degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    coeffs: Vec<Rat>,
}

impl BivarPoly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs a degree");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Rat::zero(); degree + 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^(d-i) y^i`.
    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let d = self.degree();
        self.coeffs.iter().enumerate().fold(Rat::zero(), |acc, (i, c)| {
            acc + c * pow(x, d - i) * pow(y, i)
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Rescales to integer coefficients with content one and the first
    /// nonzero coefficient positive; returns the factor `k` with
    /// `self = k * result`.
    pub fn primitive_part(&self) -> (Rat, Self) {
        let ints = primitive_integer(&self.coeffs);
        let prim = Self::new(ints.iter().map(int_rat).collect());
        let (i, c) = prim
            .coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("nonzero polynomial");
        (&self.coeffs[i] / c, prim)
    }
}

fn pow(x: &Rat, k: usize) -> Rat {
    (0..k).fold(Rat::one(), |acc, _| acc * x)
}

/// Writes a nonzero homogeneous `h` of even degree as `k * f^2` with `f`
/// primitive integral.
///
/// The power of `y` dividing `h` is split off first; the remaining
/// polynomial has nonzero `x`-leading coefficient and its square root is
/// determined top-down by coefficient matching, then verified exactly.
pub fn perfect_square_root(h: &BivarPoly) -> Result<(Rat, BivarPoly)> {
    if h.is_zero() {
        return Err(Error::ZeroInput);
    }
    let d = h.degree();
    if d % 2 == 1 {
        return Err(Error::NotAPerfectSquare);
    }
    // h = y^j * g with g(1, 0) != 0
    let j = h.coeffs.iter().take_while(|c| c.is_zero()).count();
    if j % 2 == 1 {
        return Err(Error::NotAPerfectSquare);
    }
    let g = &h.coeffs[j..];
    let e = (d - j) / 2;
    let lead = g[0].clone();
    // monic square root r of g / lead: r_0 = 1, and the coefficient of
    // x^(2e-i) y^i in r^2 is 2 r_i + sum_{0<l<i} r_l r_{i-l}
    let target: Vec<Rat> = g.iter().map(|c| c / &lead).collect();
    let mut r = vec![Rat::one()];
    for i in 1..=e {
        let partial = (1..i).fold(Rat::zero(), |acc, l| acc + &r[l] * &r[i - l]);
        r.push((&target[i] - partial) / rat(2));
    }
    let root = BivarPoly::new(r);
    if root.mul(&root).coeffs != target {
        return Err(Error::NotAPerfectSquare);
    }
    // f = y^(j/2) * root, normalized
    let mut f_coeffs = vec![Rat::zero(); j / 2];
    f_coeffs.extend(root.coeffs);
    let (scale, f) = BivarPoly::new(f_coeffs).primitive_part();
    let k = lead * &scale * &scale;
    debug_assert_eq!(f.mul(&f).scale(&k), *h);
    Ok((k, f))
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = (if c.is_negative() { "-" } else { "+" }, c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = |v: &str, k: usize| match k {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{k}"),
            };
            let mono = format!("{}{}", var("x", d - i), var("y", i));
            if mono.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rat(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
