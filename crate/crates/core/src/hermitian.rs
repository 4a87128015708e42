//! Hermitian forms attached to polarizations of Weil type, and their
//! discriminants in `Q^* / Nm(K^*)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cartan::CartanForm;
use crate::cycles::gram_matrix;
use crate::error::{Error, Result};
use crate::hilbert::is_norm;
use crate::hodge::B1Class;
use crate::linalg::{self, RatMatrix};
use crate::quad::QuadElem;
use crate::rat::{int_rat, proportional, rat_sqrt, squarefree_part, Rat};
use crate::scalar::Scalar;
use crate::weil::eigenforms;

/// A square matrix over `Q(sqrt(-d))`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    entries: Vec<Vec<QuadElem>>,
    d: BigInt,
}

impl HermitianMatrix {
    /// Checks `psi_ij = conj(psi_ji)`.
    pub fn new(entries: Vec<Vec<QuadElem>>, d: BigInt) -> Result<Self> {
        let n = entries.len();
        for i in 0..n {
            for j in 0..n {
                if entries[i][j] != entries[j][i].conj() {
                    return Err(Error::Internal(format!("matrix is not Hermitian at ({i},{j})")));
                }
            }
        }
        Ok(Self { entries, d })
    }

    pub fn entries(&self) -> &[Vec<QuadElem>] {
        &self.entries
    }

    /// The squarefree `d > 0` with entries in `Q(sqrt(-d))`.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn det(&self) -> Rat {
        let one = QuadElem::from_rat(Rat::one(), &-int_rat(&self.d));
        let det = linalg::det(&self.entries, &one).expect("determinant over a field");
        assert!(det.is_rational(), "Hermitian determinant must be rational");
        det.re().clone()
    }
}

/// `sqrt(-d)` as a rational 2x2 matrix `M / m`, where `M` is the embedding
/// matrix and `Delta = -d m^2` with `d` squarefree.
fn normalized_root(f: &CartanForm) -> Result<(BigInt, [[Rat; 2]; 2])> {
    let delta = f.discriminant();
    if !delta.is_negative() {
        return Err(Error::NotImaginary(crate::rat::fmt_rat(&delta)));
    }
    let d = -squarefree_part(&delta)?;
    let m = rat_sqrt(&(&delta / -int_rat(&d))).ok_or_else(|| Error::Internal("discriminant split".into()))?;
    let e = f.embedding_matrix_rat();
    let j = [[&e[0][0] / &m, &e[0][1] / &m], [&e[1][0] / &m, &e[1][1] / &m]];
    Ok((d, j))
}

/// The operator `sqrt(-d)` on `H_1(J x J, Q) = H_1(J) (x) Q^2`: on the
/// homology basis dual to `dx_i, dy_i` it acts by the transpose of `M / m`,
/// which is the map whose pullback is the action of `M / m` on forms.
fn homology_operator(j: &[[Rat; 2]; 2]) -> RatMatrix {
    let mut op = vec![vec![Rat::zero(); 8]; 8];
    for i in 0..4 {
        // column i: image of (f_i, 0); column 4 + i: image of (0, f_i)
        op[i][i] = j[0][0].clone();
        op[4 + i][i] = j[0][1].clone();
        op[i][4 + i] = j[1][0].clone();
        op[4 + i][4 + i] = j[1][1].clone();
    }
    op
}

/// First standard vectors not in the `K`-span of those already chosen.
fn greedy_k_basis(op: &RatMatrix) -> Vec<Vec<Rat>> {
    let mut span: Vec<Vec<Rat>> = Vec::new();
    let mut basis = Vec::new();
    for i in 0..8 {
        let mut e = vec![Rat::zero(); 8];
        e[i] = Rat::one();
        let je = linalg::mat_vec(op, &e);
        let mut trial = span.clone();
        trial.push(e.clone());
        trial.push(je);
        if linalg::rank(&trial) == trial.len() {
            span = trial;
            basis.push(e);
        }
    }
    debug_assert_eq!(basis.len(), 4);
    basis
}

/// `psi_ij = E(e_i, sqrt(-d) e_j) + sqrt(-d) E(e_i, e_j)` on a `K`-basis,
/// with `E` the alternating form of `theta` on `H_1(J x J)`. The form is
/// `K`-linear in the second argument and conjugate-linear in the first.
pub fn hermitian_matrix(f: &CartanForm, theta: &B1Class) -> Result<HermitianMatrix> {
    let (d, j) = normalized_root(f)?;
    let omega_k = eigenforms(f).omega_k;
    if theta.is_zero() || !proportional(&theta.coords(), &omega_k.coords()) {
        return Err(Error::NotWeilInvariant);
    }
    let e = gram_matrix(&theta.to_form(2))?;
    let op = homology_operator(&j);
    let basis = greedy_k_basis(&op);
    let form = |x: &[Rat], y: &[Rat]| linalg::dot(x, &linalg::mat_vec(&e, y));
    let root = QuadElem::theta(&-int_rat(&d))?;
    let entries = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| root.scaled(&form(x, y)).plus(&root.embed(&form(x, &linalg::mat_vec(&op, y)))))
                .collect()
        })
        .collect();
    HermitianMatrix::new(entries, d)
}

/// The discriminant of a polarization of Weil type.
#[derive(Clone, Debug, PartialEq)]
pub struct Discriminant {
    pub det_psi: Rat,
    /// `det psi` is a norm from `K`.
    pub trivial: bool,
    /// Squarefree integer in the square class of `det psi`.
    pub squarefree_rep: BigInt,
    pub d: BigInt,
}

pub fn discriminant(f: &CartanForm, theta: &B1Class) -> Result<Discriminant> {
    let psi = hermitian_matrix(f, theta)?;
    let det_psi = psi.det();
    let minus_d = -int_rat(psi.d());
    Ok(Discriminant {
        trivial: is_norm(&det_psi, &minus_d)?,
        squarefree_rep: squarefree_part(&det_psi)?,
        det_psi,
        d: psi.d().clone(),
    })
}

/// The Hermitian matrix `diag(b, b, -b, -ab)` of the `E^4` example: its
/// determinant `a b^4` and the squarefree representative of its class.
pub fn e4_discriminant(a: &Rat, b: &Rat) -> Result<(Rat, Rat)> {
    if !a.is_positive() || b.is_zero() {
        return Err(Error::DegenerateInput);
    }
    let diag = [b.clone(), b.clone(), -b.clone(), -(a * b)];
    let m: Vec<Vec<Rat>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { diag[i].clone() } else { Rat::zero() }).collect())
        .collect();
    let det = linalg::det(&m, &Rat::one()).expect("diagonal matrix");
    let rep = int_rat(&squarefree_part(&det)?);
    Ok((det, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn cf(a: i64, b: i64, c: i64) -> CartanForm {
        CartanForm::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn schoen_discriminant() {
        let r = discriminant(&cf(1, 1, 1), &B1Class::from_i64(2, -1, 2)).unwrap();
        assert_eq!(r.det_psi, rat(144));
        assert_eq!(r.d, BigInt::from(3));
        assert!(r.trivial);
        assert_eq!(r.squarefree_rep, BigInt::one());
    }

    #[test]
    fn gaussian_discriminant() {
        let r = discriminant(&cf(1, 0, 1), &B1Class::from_i64(1, 0, 1)).unwrap();
        assert!(r.det_psi.is_positive());
        assert!(r.trivial);
    }

    #[test]
    fn hermitian_symmetry_and_errors() {
        let psi = hermitian_matrix(&cf(2, 1, 3), &eigenforms(&cf(2, 1, 3)).omega_k).unwrap();
        assert_eq!(psi.size(), 4);
        assert_eq!(hermitian_matrix(&cf(0, 1, 0), &B1Class::from_i64(0, 1, 0)), Err(Error::NotImaginary("1".into())));
        assert_eq!(hermitian_matrix(&cf(1, 1, 1), &B1Class::from_i64(1, 0, 1)), Err(Error::NotWeilInvariant));
    }

    #[test]
    fn greedy_basis_is_first_block() {
        let (_, j) = normalized_root(&cf(1, 1, 1)).unwrap();
        let basis = greedy_k_basis(&homology_operator(&j));
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v.iter().position(|x| !x.is_zero()), Some(i));
        }
    }

    #[test]
    fn e4_examples() {
        assert_eq!(e4_discriminant(&rat(5), &rat(1)).unwrap(), (rat(5), rat(5)));
        assert_eq!(e4_discriminant(&rat(1), &rat(3)).unwrap(), (rat(81), rat(1)));
        assert_eq!(e4_discriminant(&rat(2), &ratio(1, 2)).unwrap(), (ratio(1, 8), rat(2)));
        assert_eq!(e4_discriminant(&rat(-1), &rat(1)), Err(Error::DegenerateInput));
    }
}
