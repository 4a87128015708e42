//! Dense exact linear algebra over Q (row-major `Vec<Vec<Rat>>`), plus a
//! generic determinant for any [`Scalar`] field.

use num_traits::{One, Zero};

use crate::rat::Rat;
use crate::scalar::Scalar;

pub type RatMatrix = Vec<Vec<Rat>>;

/// Reduced row echelon form and pivot columns.
pub fn rref(rows: &[Vec<Rat>]) -> (RatMatrix, Vec<usize>) {
    let mut m: RatMatrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{v : rows * v = 0}`; `ncols` is needed when `rows` is empty.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> RatMatrix {
    let (m, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn transpose(rows: &[Vec<Rat>]) -> RatMatrix {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(rows: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    rows.iter().map(|r| dot(r, v)).collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> RatMatrix {
    let bt = transpose(b);
    a.iter().map(|r| bt.iter().map(|c| dot(r, c)).collect()).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Affine solution set of `a x = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    pub directions: RatMatrix,
}

pub fn solve_affine(a: &[Vec<Rat>], b: &[Rat], nvars: usize) -> Option<AffineSolution> {
    let augmented: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let (m, pivots) = rref(&augmented);
    if pivots.contains(&nvars) {
        return None;
    }
    let mut particular = vec![Rat::zero(); nvars];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = m[r][nvars].clone();
    }
    Some(AffineSolution { particular, directions: nullspace(a, nvars) })
}

/// Basis of the intersection of the row spaces of `u` and `w`.
pub fn intersect_spans(u: &[Vec<Rat>], w: &[Vec<Rat>]) -> RatMatrix {
    let dim = u.first().or(w.first()).map_or(0, Vec::len);
    // columns: u_1..u_k, -w_1..-w_l ; kernel gives x with sum x_i u_i = sum y_j w_j
    let k = u.len();
    let mut cols: RatMatrix = u.to_vec();
    cols.extend(w.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
    let sys = transpose(&cols);
    let kernel = nullspace(&sys, cols.len());
    let vecs: RatMatrix = kernel
        .iter()
        .map(|x| {
            (0..dim)
                .map(|j| (0..k).fold(Rat::zero(), |acc, i| acc + &x[i] * &u[i][j]))
                .collect()
        })
        .collect();
    let (m, piv) = rref(&vecs);
    m.into_iter().take(piv.len()).collect()
}

/// Determinant by Gaussian elimination over a field of scalars.
///
/// Returns `None` if elimination meets a column whose nonzero entries are
/// all zero divisors (only possible in split quadratic algebras).
pub fn det<S: Scalar>(m: &[Vec<S>], one: &S) -> Option<S> {
    let n = m.len();
    let mut a: Vec<Vec<S>> = m.to_vec();
    let mut acc = one.clone();
    for c in 0..n {
        let p = (c..n).find(|&i| a[i][c].try_inverse().is_some());
        let Some(p) = p else {
            if (c..n).all(|i| a[i][c].vanishes()) {
                return Some(one.zero_like());
            }
            return None;
        };
        if p != c {
            a.swap(p, c);
            acc = acc.negated();
        }
        let inv = a[c][c].try_inverse()?;
        acc = acc.times(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].vanishes() {
                continue;
            }
            let f = a[i][c].times(&inv);
            for j in c..n {
                let d = f.times(&a[c][j]);
                a[i][j] = a[i][j].minus(&d);
            }
        }
    }
    Some(acc)
}

/// 3x3 determinant by cofactor expansion; works over any commutative ring.
pub fn det3<S: Scalar>(m: &[Vec<S>]) -> S {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].times(&m[r2][c2]).minus(&m[r1][c2].times(&m[r2][c1]))
    };
    m[0][0]
        .times(&minor(1, 2, 1, 2))
        .minus(&m[0][1].times(&minor(1, 2, 0, 2)))
        .plus(&m[0][2].times(&minor(1, 2, 0, 1)))
}

/// Adjugate of a 3x3 matrix.
pub fn adjugate3(m: &[Vec<Rat>]) -> RatMatrix {
    let mut out = vec![vec![Rat::zero(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            // cofactor C_{ji}
            let rs: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cs: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let minor = &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]];
            *x = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    out
}
