//! Weil classes attached to Cartan subalgebras, the cubic fourfold `Z` of
//! limit Weil classes in `P B^2`, its singular Veronese surface `S`, and the
//! procedures that recover a Cartan from a class.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bivar::{perfect_square_root, BivarPoly};
use crate::cartan::CartanForm;
use crate::error::{Error, Result};
use crate::forms::{LinearMap1, MultiForm};
use crate::hodge::{B1Class, B2Class, GlMatrix};
use crate::linalg::{self, RatMatrix};
use crate::mpoly::{MPoly, S, T, X, Y};
use crate::quad::QuadElem;
use crate::rat::{int_rat, primitive_integer, rat, Rat};
use crate::scalar::Scalar;

/// Eigenvectors of a Cartan acting on `B^1`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    pub cartan: CartanForm,
    pub delta: Rat,
    /// `alpha_+^2 w1 + alpha_+ beta_+ ws + beta_+^2 w2`.
    pub omega_plus: B1Class<QuadElem>,
    /// The conjugate of `omega_plus`.
    pub omega_minus: B1Class<QuadElem>,
    /// `2C w1 - B ws + 2A w2`.
    pub omega_k: B1Class,
    /// `2 alpha_+ alpha_- w1 + (alpha_+ beta_- + alpha_- beta_+) ws + 2 beta_+ beta_- w2`,
    /// a multiple of `omega_k` scaled compatibly with `omega_plus`.
    pub omega_k_hom: B1Class,
}

fn conj1(v: &B1Class<QuadElem>) -> B1Class<QuadElem> {
    B1Class::new(v.a.conj(), v.b.conj(), v.c.conj())
}

fn rational_part(x: &QuadElem) -> Rat {
    assert!(x.is_rational(), "expected a rational element, got {x}");
    x.re().clone()
}

pub fn eigenforms(f: &CartanForm) -> EigenData {
    let (alpha, beta) = f.root_vector();
    let omega_plus = B1Class::new(alpha.times(&alpha), alpha.times(&beta), beta.times(&beta));
    let omega_minus = conj1(&omega_plus);
    let (ac, bc) = (alpha.conj(), beta.conj());
    let two = rat(2);
    let omega_k_hom = B1Class::new(
        rational_part(&alpha.times(&ac).scaled(&two)),
        rational_part(&alpha.times(&bc).plus(&ac.times(&beta))),
        rational_part(&beta.times(&bc).scaled(&two)),
    );
    let [a, b, c] = f.coeffs();
    EigenData {
        cartan: f.clone(),
        delta: f.discriminant(),
        omega_plus,
        omega_minus,
        omega_k: B1Class::new(&two * c, -b, &two * a),
        omega_k_hom,
    }
}

/// The three rational classes `w_K^2`, `w_+^2 + w_-^2`, `(w_+^2 - w_-^2)/theta`
/// spanning `B^2_K`.
pub fn weil_plane(f: &CartanForm) -> [B2Class; 3] {
    let e = eigenforms(f);
    let sq = e.omega_plus.square();
    let two = rat(2);
    let re = B2Class::from_slice(&sq.x.iter().map(|x| x.re() * &two).collect::<Vec<_>>());
    let im = B2Class::from_slice(&sq.x.iter().map(|x| x.im() * &two).collect::<Vec<_>>());
    [e.omega_k.square(), re, im]
}

/// Rational basis `{w_K^n, w_+^n + w_-^n, (w_+^n - w_-^n)/theta}` of `B^n_K`
/// inside the forms of degree `2n` on `J x J`, `dim J = n`.
pub fn weil_space(f: &CartanForm, n: usize) -> Result<[MultiForm; 3]> {
    if !(1..=3).contains(&n) {
        return Err(Error::DimensionOutOfRange(n));
    }
    let e = eigenforms(f);
    let one_q = QuadElem::from_rat(Rat::one(), &e.delta);
    let plus_n = e.omega_plus.to_form(n).pow(n, &one_q);
    let (re, im) = plus_n.split_parts();
    let two = rat(2);
    Ok([e.omega_k.to_form(n).pow(n, &Rat::one()), re.scale_rat(&two), im.scale_rat(&two)])
}

/// `c` lies in `B^2_K` for the Cartan `f`.
pub fn membership(c: &B2Class, f: &CartanForm) -> bool {
    let mut rows: Vec<Vec<Rat>> = weil_plane(f).iter().map(B2Class::to_vec).collect();
    rows.push(c.to_vec());
    linalg::rank(&rows) == 3
}

/// Coordinates `(b, p, q)` of `c` in the basis
/// `(w_K,hom^2, w_+^2 + w_-^2, (w_+^2 - w_-^2)/theta)`, if `c` is in `B^2_K`.
pub fn plane_coordinates(c: &B2Class, f: &CartanForm) -> Option<[Rat; 3]> {
    let e = eigenforms(f);
    let [_, re, im] = weil_plane(f);
    let basis = [e.omega_k_hom.square(), re, im];
    let cols = linalg::transpose(&basis.iter().map(B2Class::to_vec).collect::<Vec<_>>());
    let sol = linalg::solve_affine(&cols, &c.to_vec(), 3)?;
    let [b, p, q] = [sol.particular[0].clone(), sol.particular[1].clone(), sol.particular[2].clone()];
    Some([b, p, q])
}

/// Whether `c = a w_+^2 + b w_K^2 + c' w_-^2` satisfies `4 b^2 = a c'`, the
/// equation of the conic `C_K = S` meet `P B^2_K`; `None` if `c` is not in
/// the plane.
pub fn on_conic_ck(c: &B2Class, f: &CartanForm) -> Option<bool> {
    let [b, p, q] = plane_coordinates(c, f)?;
    // a = p + (q / delta) theta and c' is its conjugate
    let delta = f.discriminant();
    let norm = &p * &p - &q * &q / &delta;
    Some(rat(4) * &b * &b == norm)
}

/// Stratum of a class with respect to `Z` and `S`, by the rank of `M_G`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StratumTag {
    Generic,
    OnZminusS,
    OnS,
    Zero,
}

impl StratumTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumTag::Generic => "Generic",
            StratumTag::OnZminusS => "OnZminusS",
            StratumTag::OnS => "OnS",
            StratumTag::Zero => "Zero",
        }
    }
}

/// The symmetric matrix whose determinant defines `Z`.
pub fn matrix_mg<C: Scalar>(c: &B2Class<C>) -> Vec<Vec<C>> {
    let x = &c.x;
    let e02 = x[1].minus(&x[5].scaled(&rat(4)));
    vec![
        vec![x[0].scaled(&rat(2)), x[3].negated(), e02.clone()],
        vec![x[3].negated(), x[1].clone(), x[4].clone()],
        vec![e02, x[4].clone(), x[2].scaled(&rat(2))],
    ]
}

/// The cubic `G = det M_G`.
pub fn cubic_g(c: &B2Class) -> Rat {
    linalg::det3(&matrix_mg(c))
}

pub fn mg_rank(c: &B2Class) -> usize {
    linalg::rank(&matrix_mg(c))
}

pub fn classify(c: &B2Class) -> StratumTag {
    match mg_rank(c) {
        3 => StratumTag::Generic,
        2 => StratumTag::OnZminusS,
        1 => StratumTag::OnS,
        _ => StratumTag::Zero,
    }
}

/// `(s:t:u) -> (s^2, 2u^2, t^2, -2us, 2ut, (u^2 - st)/2)`, parametrizing `S`.
pub fn nu_prime(s: &Rat, t: &Rat, u: &Rat) -> Result<B2Class> {
    if s.is_zero() && t.is_zero() && u.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(nu_prime_any(s, t, u))
}

fn nu_prime_any<C: Scalar>(s: &C, t: &C, u: &C) -> B2Class<C> {
    B2Class::new([
        s.times(s),
        u.times(u).scaled(&rat(2)),
        t.times(t),
        u.times(s).scaled(&rat(-2)),
        u.times(t).scaled(&rat(2)),
        u.times(u).minus(&s.times(t)).scaled(&crate::rat::ratio(1, 2)),
    ])
}

fn height(r: &Rat) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// The row of largest height (first on ties), made primitive.
fn dominant_row(m: &RatMatrix) -> Vec<BigInt> {
    let best = m
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().any(|x| !x.is_zero()))
        .max_by(|(i, a), (j, b)| {
            let ha = a.iter().map(height).max().unwrap();
            let hb = b.iter().map(height).max().unwrap();
            ha.cmp(&hb).then(j.cmp(i))
        })
        .map(|(_, row)| row.clone())
        .expect("nonzero matrix");
    primitive_integer(&best)
}

/// The point `(s:t:u)` with `nu'(s, t, u)` proportional to `c`, for `c` on `S`.
pub fn nu_prime_inverse(c: &B2Class) -> Result<[BigInt; 3]> {
    if classify(c) != StratumTag::OnS {
        return Err(Error::NotOnS);
    }
    // M_G = 2 v v^T up to scale with v = (s, u, t)
    let v = dominant_row(&matrix_mg(c));
    Ok([v[0].clone(), v[2].clone(), v[1].clone()])
}

/// `(x^2 w1 + xy ws + y^2 w2)^2`, the point of the quartic curve `C_4`.
pub fn c4_point(x: &Rat, y: &Rat) -> Result<B2Class> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(B1Class::new(x * x, x * y, y * y).square())
}

/// Output of [`find_k`]: the Cartan and the quartic it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct FindK {
    pub cartan: CartanForm,
    /// The coefficient of `s^2 t` in `G(s c + t q(x, y))`.
    pub quartic: BivarPoly,
    /// `quartic = k * f^2` with `f` the form of `cartan`.
    pub k: Rat,
}

fn det3_mpoly(m: &[Vec<MPoly>]) -> MPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]));
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .sub(&m[0][1].mul(&minor(1, 2, 0, 2)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// `G(s c + t q(x, y))` as a polynomial in `s, t, x, y`, where `q` runs over `C_4`.
pub fn pencil_cubic(c: &B2Class) -> MPoly {
    let (x, y) = (MPoly::var(X), MPoly::var(Y));
    let x2 = x.mul(&x);
    let y2 = y.mul(&y);
    let xy = x.mul(&y);
    let two = rat(2);
    let q = [
        x2.mul(&x2),
        x2.mul(&y2).scale(&two),
        y2.mul(&y2),
        x2.mul(&xy).scale(&two),
        y2.mul(&xy).scale(&two),
        x2.mul(&y2),
    ];
    let (s, t) = (MPoly::var(S), MPoly::var(T));
    let entries: Vec<MPoly> =
        (0..6).map(|i| s.scale(&c.x[i]).add(&t.mul(&q[i]))).collect();
    let e = &entries;
    let e02 = e[1].sub(&e[5].scale(&rat(4)));
    let m = vec![
        vec![e[0].scale(&two), e[3].scale(&rat(-1)), e02.clone()],
        vec![e[3].scale(&rat(-1)), e[1].clone(), e[4].clone()],
        vec![e02, e[4].clone(), e[2].scale(&two)],
    ];
    det3_mpoly(&m)
}

/// Recovers the unique Cartan `f` with `c` in `B^2_K`, for `c` on `Z` but
/// off `S`, from the identity `G(s c + t q(x, y)) = k f(x, y)^2 s^2 t`.
pub fn find_k(c: &B2Class) -> Result<FindK> {
    match classify(c) {
        StratumTag::Generic => return Err(Error::NotOnZ),
        StratumTag::OnS => return Err(Error::OnSingularLocus),
        StratumTag::Zero => return Err(Error::ZeroInput),
        StratumTag::OnZminusS => {}
    }
    let g = pencil_cubic(c);
    for (a, b) in [(3, 0), (1, 2), (0, 3)] {
        if g.has_st(a, b) {
            return Err(Error::Internal(format!("G(sc+tq) has an s^{a} t^{b} term")));
        }
    }
    let quartic = g.st_coefficient(2, 1, 4);
    let (k, f) = perfect_square_root(&quartic)?;
    let cartan = CartanForm::from_rats(f.coeff(0), f.coeff(1), f.coeff(2))?;
    if !membership(c, &cartan) {
        return Err(Error::Internal(format!("recovered Cartan {cartan} does not contain the class")));
    }
    Ok(FindK { cartan, quartic, k })
}

/// The two Weil planes of distinct Cartans meet in one point, which lies on `S`.
pub fn intersect_planes(f1: &CartanForm, f2: &CartanForm) -> Result<B2Class> {
    if f1 == f2 {
        return Err(Error::IdenticalCartans);
    }
    let p1: Vec<Vec<Rat>> = weil_plane(f1).iter().map(B2Class::to_vec).collect();
    let p2: Vec<Vec<Rat>> = weil_plane(f2).iter().map(B2Class::to_vec).collect();
    let meet = linalg::intersect_spans(&p1, &p2);
    if meet.len() != 1 {
        return Err(Error::Internal(format!("Weil planes meet in dimension {}", meet.len())));
    }
    Ok(B2Class::from_slice(&meet[0]).primitive())
}

/// Cartans `(A, B, C)` whose Weil plane contains `nu'(s, t, u)`: the line
/// `A s - C t - B u = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyPencil {
    /// `(s, t, u)`, primitive.
    pub point: [BigInt; 3],
}

impl CayleyPencil {
    /// Coefficients of the linear constraint on `(A, B, C)`.
    pub fn constraint(&self) -> [BigInt; 3] {
        let [s, t, u] = &self.point;
        [s.clone(), -u, -t]
    }

    pub fn contains(&self, f: &CartanForm) -> bool {
        let [p, q, r] = self.constraint();
        (p * f.a() + q * f.b() + r * f.c()).is_zero()
    }

    /// Human-readable form of the constraint, e.g. `"6A - C = 0"`.
    pub fn constraint_string(&self) -> String {
        let mut out = String::new();
        for (coef, name) in self.constraint().iter().zip(["A", "B", "C"]) {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            let sign = if coef.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if coef.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(name);
        }
        out.push_str(" = 0");
        out
    }

    /// An imaginary Cartan in the pencil, if there is one.
    ///
    /// On the pencil `lambda P + mu Q` the discriminant is a binary quadratic
    /// form `a lambda^2 + b lambda mu + c mu^2`; it takes a negative value iff
    /// `a < 0`, `c < 0`, or it is indefinite.
    pub fn imaginary_member(&self) -> Option<CartanForm> {
        let row: Vec<Rat> = self.constraint().iter().map(int_rat).collect();
        let basis = linalg::nullspace(&[row], 3);
        let [p, q] = [&basis[0], &basis[1]];
        let disc = |v: &[Rat]| &v[1] * &v[1] - rat(4) * &v[0] * &v[2];
        let (a, c) = (disc(p), disc(q));
        let sum: Vec<Rat> = p.iter().zip(q).map(|(x, y)| x + y).collect();
        let b = disc(&sum) - &a - &c;
        let (lambda, mu) = if a.is_negative() {
            (rat(1), rat(0))
        } else if c.is_negative() {
            (rat(0), rat(1))
        } else if &b * &b - rat(4) * &a * &c > Rat::zero() {
            if a.is_zero() {
                let sign = if b.is_positive() { rat(1) } else { rat(-1) };
                (-sign * (&c / b.abs() + rat(1)), rat(1))
            } else {
                (-&b / (rat(2) * &a), rat(1))
            }
        } else {
            return None;
        };
        let v: Vec<Rat> = p.iter().zip(q).map(|(x, y)| &lambda * x + &mu * y).collect();
        let f = CartanForm::from_rats(&v[0], &v[1], &v[2]).ok()?;
        debug_assert!(f.discriminant().is_negative() && self.contains(&f));
        Some(f)
    }
}

pub fn cayley_pencil(c: &B2Class) -> Result<CayleyPencil> {
    Ok(CayleyPencil { point: nu_prime_inverse(c)? })
}

/// Whether the pencil has an imaginary member, with a witness.
pub fn pencil_has_imaginary(pencil: &CayleyPencil) -> (bool, Option<CartanForm>) {
    let w = pencil.imaginary_member();
    (w.is_some(), w)
}

/// `C_n = n(-n ws^2 + 2n^2 w1^2 + 2 w2^2)`.
pub fn markman_class(n: i64) -> Result<B2Class> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    Ok(B2Class::from_i64([2 * n * n * n, 0, 2 * n, 0, 0, -n * n]))
}

/// Checks `(a+ - a-)^2 C_n = n(-a+ a- w_K^2 + 2 a-^2 w+^2 + 2 a+^2 w-^2)`
/// exactly in `Q[theta]`, where `a+-` are the affine roots of `f(x, 1)` and
/// `w_K = 2 a+ a- w1 + (a+ + a-) ws + 2 w2`, `w+- = a+-^2 w1 + a+- ws + w2`.
/// Requires `A != 0`.
pub fn markman_identity(f: &CartanForm, n: i64) -> Result<bool> {
    if f.a().is_zero() {
        return Err(Error::DegenerateInput);
    }
    let c_n = markman_class(n)?;
    let [a, b, _] = f.coeffs();
    let delta = f.discriminant();
    let theta = QuadElem::theta(&delta)?;
    let one = theta.embed(&Rat::one());
    let two_a = rat(2) * &a;
    let ap = theta.minus(&theta.embed(&b)).scaled(&two_a.recip());
    let am = ap.conj();
    let prod = ap.times(&am);
    let plus = B1Class::new(ap.times(&ap), ap.clone(), one.clone());
    let minus = B1Class::new(am.times(&am), am.clone(), one.clone());
    let wk = B1Class::new(prod.scaled(&rat(2)), ap.plus(&am), one.scaled(&rat(2)));
    let nq = theta.embed(&rat(n));
    let diff = ap.minus(&am);
    let lhs = B2Class::new(c_n.x.clone().map(|x| theta.embed(&x))).scale(&diff.times(&diff));
    let rhs = wk
        .square()
        .scale(&prod.negated())
        .add(&plus.square().scale(&am.times(&am).scaled(&rat(2))))
        .add(&minus.square().scale(&ap.times(&ap).scaled(&rat(2))))
        .scale(&nq);
    Ok(lhs == rhs)
}

/// For `c` on `Z - S` the adjugate of `M_G(c)` is `mu w w^T`; returns the
/// point `(s:t:u) = (w0 : w2 : w1)`, the dual of the Cayley line of the plane.
pub fn duality_adjoint(c: &B2Class) -> Result<[BigInt; 3]> {
    if classify(c) != StratumTag::OnZminusS {
        return Err(Error::NotRankTwo);
    }
    let adj = linalg::adjugate3(&matrix_mg(c));
    let w = dominant_row(&adj);
    Ok([w[0].clone(), w[2].clone(), w[1].clone()])
}

fn transpose2(g: &GlMatrix) -> GlMatrix {
    [[g[0][0].clone(), g[1][0].clone()], [g[0][1].clone(), g[1][1].clone()]]
}

/// Checks that `k = a + b M` acts on `w_+^n`, `w_-^n`, `w_K^n` by
/// `k^(2n)`, `kbar^(2n)`, `Nm(k)^n`, with `M` the embedding matrix of `f`.
pub fn eigen_check(f: &CartanForm, a: &Rat, b: &Rat, n: usize) -> Result<bool> {
    if !(1..=3).contains(&n) {
        return Err(Error::DimensionOutOfRange(n));
    }
    let m = f.embedding_matrix_rat();
    let k: GlMatrix = [
        [a + b * &m[0][0], b * &m[0][1]],
        [b * &m[1][0], a + b * &m[1][1]],
    ];
    // the action of k is the pullback along its transpose
    let act = LinearMap1::from_matrix(n, &transpose2(&k));
    let e = eigenforms(f);
    let theta = QuadElem::theta(&e.delta)?;
    let kq = theta.scaled(b).plus(&theta.embed(a));
    let one_q = theta.embed(&Rat::one());
    let plus = e.omega_plus.to_form(n).pow(n, &one_q);
    let minus = e.omega_minus.to_form(n).pow(n, &one_q);
    let wk = e.omega_k.to_form(n).pow(n, &Rat::one());
    let nm = kq.norm();
    let ok_plus = act.apply(&plus) == plus.scale(&kq.pow(2 * n as u32));
    let ok_minus = act.apply(&minus) == minus.scale(&kq.conj().pow(2 * n as u32));
    let ok_k = act.apply(&wk) == wk.scale_rat(&(0..n).fold(rat(1), |acc, _| acc * &nm));
    Ok(ok_plus && ok_minus && ok_k)
}
