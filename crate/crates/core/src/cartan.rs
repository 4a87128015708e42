//! Cartan subalgebras of 2x2 matrices, encoded as primitive binary quadratic
//! forms `A x^2 + B x y + C y^2` whose roots `(x:y)` are the two eigenvector
//! directions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadElem;
use crate::rat::{int_rat, int_sqrt, Rat};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanKind {
    /// Discriminant negative: an imaginary quadratic field.
    Imaginary,
    /// Positive square discriminant: a split (diagonalizable over Q) Cartan.
    SplitRational,
    /// Positive non-square discriminant: a real quadratic field.
    RealQuadratic,
}

impl CartanKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CartanKind::Imaginary => "Imaginary",
            CartanKind::SplitRational => "SplitRational",
            CartanKind::RealQuadratic => "RealQuadratic",
        }
    }
}

impl CartanForm {
    /// Normalizes to content one with the first nonzero coefficient positive.
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        let g = a.gcd(&b).gcd(&c);
        if g.is_zero() {
            return Err(Error::ZeroForm);
        }
        let first = [&a, &b, &c].into_iter().find(|x| !x.is_zero()).unwrap();
        let g = if first.is_negative() { -g } else { g };
        let f = Self { a: a / &g, b: b / &g, c: c / &g };
        if f.discriminant_int().is_zero() {
            return Err(Error::DegenerateCartan);
        }
        Ok(f)
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    /// Builds the form from rational coefficients (scaled to integers).
    pub fn from_rats(a: &Rat, b: &Rat, c: &Rat) -> Result<Self> {
        let ints = crate::rat::primitive_integer(&[a.clone(), b.clone(), c.clone()]);
        Self::new(ints[0].clone(), ints[1].clone(), ints[2].clone())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn coeffs(&self) -> [Rat; 3] {
        [int_rat(&self.a), int_rat(&self.b), int_rat(&self.c)]
    }

    fn discriminant_int(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// B^2 - 4AC.
    pub fn discriminant(&self) -> Rat {
        int_rat(&self.discriminant_int())
    }

    pub fn kind(&self) -> CartanKind {
        let d = self.discriminant_int();
        if d.is_negative() {
            CartanKind::Imaginary
        } else if int_sqrt(&d).is_some() {
            CartanKind::SplitRational
        } else {
            CartanKind::RealQuadratic
        }
    }

    /// `[[-B, -2C], [2A, B]]`; it squares to the discriminant times the
    /// identity and fixes both root directions of the form.
    pub fn embedding_matrix(&self) -> [[BigInt; 2]; 2] {
        let two = BigInt::from(2);
        [[-&self.b, -(&two * &self.c)], [&two * &self.a, self.b.clone()]]
    }

    pub fn embedding_matrix_rat(&self) -> [[Rat; 2]; 2] {
        let m = self.embedding_matrix();
        [[int_rat(&m[0][0]), int_rat(&m[0][1])], [int_rat(&m[1][0]), int_rat(&m[1][1])]]
    }

    /// Evaluates the form at a rational point.
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        int_rat(&self.a) * x * x + int_rat(&self.b) * x * y + int_rat(&self.c) * y * y
    }

    /// An eigenvector `v+` of the embedding matrix for the eigenvalue theta,
    /// with theta^2 = discriminant, as a point of (Q[theta])^2.
    ///
    /// `v+ = (alpha, beta)` is a root of the form, and its conjugate is the
    /// other root. In a split algebra both projections of the returned
    /// vector are nonzero.
    pub fn root_vector(&self) -> (QuadElem, QuadElem) {
        let delta = self.discriminant();
        let t = QuadElem::theta(&delta).expect("nondegenerate");
        let [a, b, c] = self.coeffs();
        let two = Rat::from_integer(2.into());
        let cand1 = (t.minus(&t.embed(&b)), t.embed(&(&two * &a)));
        let cand2 = (t.embed(&(&two * &c)), t.embed(&-&b).minus(&t));
        let sum = (cand1.0.plus(&cand2.0), cand1.1.plus(&cand2.1));
        [cand1, cand2, sum]
            .into_iter()
            .find(|(x, y)| usable_point(x, y))
            .expect("some candidate eigenvector is nondegenerate")
    }

    /// The field (or algebra) generated by the embedding, e.g. `Q(sqrt(-3))`.
    pub fn field_name(&self) -> String {
        match self.kind() {
            CartanKind::SplitRational => "split Q×Q".to_string(),
            _ => {
                let sf = crate::rat::squarefree_part(&self.discriminant())
                    .map(|s| s.to_string())
                    .unwrap_or_else(|_| self.discriminant_int().to_string());
                format!("Q(sqrt({sf}))")
            }
        }
    }

    pub fn to_i64s(&self) -> Option<[i64; 3]> {
        use num_traits::ToPrimitive;
        Some([self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?])
    }
}

/// A projective point over the algebra is usable when it is nonzero in every
/// component (in a field: simply nonzero).
fn usable_point(x: &QuadElem, y: &QuadElem) -> bool {
    match (x.components(), y.components()) {
        (Some((x1, x2)), Some((y1, y2))) => {
            !(x1.is_zero() && y1.is_zero()) && !(x2.is_zero() && y2.is_zero())
        }
        _ => !(x.is_zero() && y.is_zero()),
    }
}

/// `B^2 - 4AC` with its classification.
pub fn cartan_discriminant(f: &CartanForm) -> (Rat, CartanKind) {
    (f.discriminant(), f.kind())
}

impl FromStr for CartanForm {
    type Err = Error;

    /// Parses `"A,B,C"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(s.to_string()));
        }
        let ints: Vec<BigInt> = parts
            .iter()
            .map(|p| p.parse::<BigInt>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<_>>()?;
        Self::new(ints[0].clone(), ints[1].clone(), ints[2].clone())
    }
}

impl fmt::Display for CartanForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}
