//! Algebraic cycle classes on `C x C` and `J x J`, families of classes
//! constrained to a Weil plane, and elementary divisors of polarizations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cartan::CartanForm;
use crate::error::{Error, Result};
use crate::forms::MultiForm;
use crate::hodge::{pfaffian, B1Class, B2Class};
use crate::linalg::{self, AffineSolution, RatMatrix};
use crate::rat::{ratio, Rat};
use crate::smith::{smith_divisors, IntMatrix};
use crate::weil::weil_plane;

/// Named classes in `B^2(J x J)` for `J` the Jacobian of a genus-two curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleClasses {
    /// The diagonal, `delta^*(w_J^2) / 2`.
    pub s1: B2Class,
    /// `C x C`, that is `w1 w2`.
    pub s2: B2Class,
    /// The antidiagonal, `(w1 + w2 + ws)^2 / 2`.
    pub s_minus1: B2Class,
    /// `(2C) x (2C) = 4 [C x C]`.
    pub t: B2Class,
    /// Twice the Schoen surface, `2(S1 + S2)`.
    pub schoen2: B2Class,
}

pub fn cycle_classes() -> CycleClasses {
    let h = ratio(1, 2);
    let s1 = B2Class::new([h.clone(), Rat::one(), h.clone(), -Rat::one(), -Rat::one(), h.clone()]);
    let s2 = B2Class::from_i64([0, 1, 0, 0, 0, 0]);
    let s_minus1 = B2Class::new([h.clone(), Rat::one(), h.clone(), Rat::one(), Rat::one(), h]);
    let t = s2.scale_rat(&Rat::from_integer(4.into()));
    let schoen2 = s1.add(&s2).scale_rat(&Rat::from_integer(2.into()));
    CycleClasses { s1, s2, s_minus1, t, schoen2 }
}

impl CycleClasses {
    pub fn named(&self) -> [(&'static str, &B2Class); 5] {
        [
            ("S1", &self.s1),
            ("S2", &self.s2),
            ("Sminus1", &self.s_minus1),
            ("T", &self.t),
            ("Schoen2", &self.schoen2),
        ]
    }
}

/// All `(a_1, ..., a_k)` with `base + sum a_i params_i` in `B^2_K`, or
/// `None` when there are none.
pub fn solve_membership_family(base: &B2Class, params: &[B2Class], f: &CartanForm) -> Option<AffineSolution> {
    let plane: RatMatrix = weil_plane(f).iter().map(B2Class::to_vec).collect();
    let annihilator = linalg::nullspace(&plane, 6);
    let b = base.to_vec();
    let rows: RatMatrix = annihilator
        .iter()
        .map(|l| params.iter().map(|p| linalg::dot(l, &p.to_vec())).collect())
        .collect();
    let rhs: Vec<Rat> = annihilator.iter().map(|l| -linalg::dot(l, &b)).collect();
    linalg::solve_affine(&rows, &rhs, params.len())
}

/// The alternating matrix `E[i][j] = omega(e_i, e_j)` of a 2-form on the
/// homology basis dual to `dx_1, ..., dx_2n, dy_1, ..., dy_2n`.
pub fn gram_matrix(omega: &MultiForm) -> Result<RatMatrix> {
    if omega.degree() != 2 && !omega.is_zero() {
        return Err(Error::DegreeMismatch(2, omega.degree()));
    }
    let size = 4 * omega.n();
    let mut m = vec![vec![Rat::zero(); size]; size];
    for (mask, c) in omega.terms() {
        let i = mask.trailing_zeros() as usize;
        let j = (31 - (mask & !(1 << i)).leading_zeros()) as usize;
        m[i][j] = c.clone();
        m[j][i] = -c.clone();
    }
    Ok(m)
}

/// Elementary divisors `d1 | d2 | d3 | d4` of the alternating form `theta`
/// on `H^1(J x J, Z) = Z^8`, for integral `theta`.
pub fn elementary_divisors_symplectic(theta: &B1Class) -> Result<[BigInt; 4]> {
    if theta.coords().iter().any(|x| !x.is_integer()) {
        return Err(Error::NotIntegral);
    }
    if pfaffian(theta, 2)?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let gram = gram_matrix(&theta.to_form(2))?;
    let ints: Vec<Vec<BigInt>> = gram.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
    let d = smith_divisors(&IntMatrix::new(ints));
    if d.len() != 8 || d.chunks(2).any(|p| p[0] != p[1]) {
        return Err(Error::UnpairedDivisors);
    }
    Ok([d[0].clone(), d[2].clone(), d[4].clone(), d[6].clone()])
}
