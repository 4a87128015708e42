use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use weil_core::mpoly::{MPoly, S, T, X, Y};
use weil_core::rat::{int_rat, primitive_integer, rat, ratio};
use weil_core::weil::{
    c4_point, cayley_pencil, classify, cubic_g, duality_adjoint, eigen_check, eigenforms, find_k,
    intersect_planes, matrix_mg, membership, nu_prime, on_conic_ck, weil_plane, StratumTag,
};
use weil_core::{B2Class, CartanForm, Rat, Scalar};

fn cartan() -> impl Strategy<Value = CartanForm> {
    (-6i64..=6, -6i64..=6, -6i64..=6)
        .prop_filter_map("degenerate", |(a, b, c)| CartanForm::from_i64(a, b, c).ok())
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn plane_member(f: &CartanForm, r: &Rat, s: &Rat, t: &Rat) -> B2Class {
    let [a, b, c] = weil_plane(f);
    a.scale_rat(r).add(&b.scale_rat(s)).add(&c.scale_rat(t))
}

/// `M_G` of a class whose coordinates are polynomials.
fn mg_symbolic(x: &[MPoly; 6]) -> [[MPoly; 3]; 3] {
    let two = rat(2);
    let e02 = x[1].sub(&x[5].scale(&rat(4)));
    [
        [x[0].scale(&two), x[3].scale(&rat(-1)), e02.clone()],
        [x[3].scale(&rat(-1)), x[1].clone(), x[4].clone()],
        [e02, x[4].clone(), x[2].scale(&two)],
    ]
}

fn nu_prime_symbolic(s: &MPoly, t: &MPoly, u: &MPoly) -> [MPoly; 6] {
    [
        s.mul(s),
        u.mul(u).scale(&rat(2)),
        t.mul(t),
        u.mul(s).scale(&rat(-2)),
        u.mul(t).scale(&rat(2)),
        u.mul(u).sub(&s.mul(t)).scale(&ratio(1, 2)),
    ]
}

#[test]
fn mg_of_nu_prime_is_twice_a_square_symbolically() {
    let (s, t, u) = (MPoly::var(S), MPoly::var(T), MPoly::var(X));
    let m = mg_symbolic(&nu_prime_symbolic(&s, &t, &u));
    let v = [s, u, t];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(m[i][j], v[i].mul(&v[j]).scale(&rat(2)), "entry ({i},{j})");
        }
    }
}

#[test]
fn quartic_curve_is_nu_prime_of_the_conic_symbolically() {
    let (x, y) = (MPoly::var(X), MPoly::var(Y));
    let (x2, y2, xy) = (x.mul(&x), y.mul(&y), x.mul(&y));
    // (x^2 w1 + xy ws + y^2 w2)^2 in the B^2 basis
    let c4 = [
        x2.mul(&x2),
        x2.mul(&y2).scale(&rat(2)),
        y2.mul(&y2),
        x2.mul(&xy).scale(&rat(2)),
        y2.mul(&xy).scale(&rat(2)),
        x2.mul(&y2),
    ];
    let (s, t, u) = (x2.clone(), y2.scale(&rat(-1)), xy.scale(&rat(-1)));
    assert_eq!(nu_prime_symbolic(&s, &t, &u), c4);
    // the preimage satisfies u^2 = -st
    assert_eq!(u.mul(&u), s.mul(&t).scale(&rat(-1)));
}

#[test]
fn schoen_quartic_is_eight_times_a_square() {
    let r = find_k(&B2Class::from_i64([1, 4, 1, -2, -2, 1])).unwrap();
    assert_eq!(r.cartan.to_string(), "1,1,1");
    assert_eq!(r.quartic.to_string(), "8*x^4 + 16*x^3y + 24*x^2y^2 + 16*xy^3 + 8*y^4");
}

/// `f` evaluated on the kernel of `M_G(c)`: the kernel of `M_G` for a class
/// of `B^2_K` is `(A, -B, -C)`.
fn kernel_oracle(c: &B2Class, f: &CartanForm) -> bool {
    let m = matrix_mg(c);
    let v = [int_rat(f.a()), -int_rat(f.b()), -int_rat(f.c())];
    m.iter().all(|row| (0..3).fold(Rat::zero(), |acc, j| acc + &row[j] * &v[j]).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn veronese_points_are_on_s(s in small_rat(), t in small_rat(), u in small_rat()) {
        prop_assume!(!(s.is_zero() && t.is_zero() && u.is_zero()));
        let c = nu_prime(&s, &t, &u).unwrap();
        prop_assert_eq!(classify(&c), StratumTag::OnS);
        let p = weil_core::weil::nu_prime_inverse(&c).unwrap();
        let q = primitive_integer(&[s, t, u]);
        prop_assert!(p.iter().zip(&q).all(|(a, b)| a == b) || p.iter().zip(&q).all(|(a, b)| *a == -b));
    }

    #[test]
    fn generic_classes_are_off_z(x in proptest::array::uniform6(-9i64..=9)) {
        let c = B2Class::from_i64(x);
        let on_z = cubic_g(&c).is_zero();
        prop_assert_eq!(on_z, classify(&c) != StratumTag::Generic);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn weil_planes_lie_in_z(f in cartan(), r in small_rat(), s in small_rat(), t in small_rat()) {
        let c = plane_member(&f, &r, &s, &t);
        prop_assert!(cubic_g(&c).is_zero());
        prop_assert!(membership(&c, &f));
    }

    #[test]
    fn find_k_inverts_the_weil_family(f in cartan(), r in small_rat(), s in small_rat(), t in small_rat()) {
        let c = plane_member(&f, &r, &s, &t);
        prop_assume!(classify(&c) == StratumTag::OnZminusS);
        prop_assert!(kernel_oracle(&c, &f));
        let found = find_k(&c).unwrap();
        prop_assert_eq!(found.cartan, f);
    }

    #[test]
    fn quartic_meets_the_plane_in_the_roots(p in -5i64..=5, q in 1i64..=5, r in -5i64..=5, s in 1i64..=5, x in -6i64..=6, y in -6i64..=6) {
        // f = (q x - p y)(s x - r y) has rational roots (p:q), (r:s)
        prop_assume!(p * s != q * r);
        let f = CartanForm::from_i64(q * s, -(q * r + p * s), p * r).unwrap();
        prop_assert!(membership(&c4_point(&rat(p), &rat(q)).unwrap(), &f));
        prop_assert!(membership(&c4_point(&rat(r), &rat(s)).unwrap(), &f));
        prop_assume!(x != 0 || y != 0);
        let on_root = f.eval(&rat(x), &rat(y)).is_zero();
        prop_assert_eq!(membership(&c4_point(&rat(x), &rat(y)).unwrap(), &f), on_root);
    }

    #[test]
    fn eigen_squares_are_quartic_points_on_the_cayley_line(f in cartan()) {
        let sq = eigenforms(&f).omega_plus.square();
        let (alpha, beta) = f.root_vector();
        // sq = nu'(s, t, u) with (s, t, u) = (alpha^2, -beta^2, -alpha beta)
        let v = [alpha.times(&alpha), alpha.times(&beta).negated(), beta.times(&beta).negated()];
        let m = matrix_mg(&sq);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(&m[i][j], &v[i].times(&v[j]).scaled(&rat(2)));
            }
        }
        let [a, b, c] = f.coeffs();
        let line = v[0].scaled(&a).minus(&v[2].scaled(&c)).minus(&v[1].scaled(&b));
        prop_assert!(line.is_zero());
    }

    #[test]
    fn cayley_line_points_lie_in_the_plane(f in cartan(), s in small_rat(), t in small_rat()) {
        // points of L_f: A s - C t - B u = 0
        let [a, b, c] = f.coeffs();
        let (s, t, u) = if b.is_zero() {
            if c.is_zero() { (rat(0), rat(1), rat(1)) } else { (s.clone(), &a * &s / &c, t) }
        } else {
            let u = (&a * &s - &c * &t) / &b;
            (s, t, u)
        };
        prop_assume!(!(s.is_zero() && t.is_zero() && u.is_zero()));
        let point = nu_prime(&s, &t, &u).unwrap();
        prop_assert!(membership(&point, &f));
        prop_assert!(cayley_pencil(&point).unwrap().contains(&f));
        prop_assert!(find_k(&point).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn intersections_are_on_both_conics(f in cartan(), g in cartan()) {
        prop_assume!(f != g);
        let c = intersect_planes(&f, &g).unwrap();
        prop_assert_eq!(classify(&c), StratumTag::OnS);
        prop_assert_eq!(on_conic_ck(&c, &f), Some(true));
        prop_assert_eq!(on_conic_ck(&c, &g), Some(true));
    }

    #[test]
    fn eigenvalues_on_weil_classes(f in cartan(), a in small_rat(), b in small_rat(), n in 2usize..=3) {
        prop_assert!(eigen_check(&f, &a, &b, n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn duality_is_constant_on_planes(f in cartan(), coeffs in proptest::collection::vec((small_rat(), small_rat(), small_rat()), 20)) {
        let mut seen: Option<[BigInt; 3]> = None;
        for (r, s, t) in &coeffs {
            let c = plane_member(&f, r, s, t);
            if classify(&c) != StratumTag::OnZminusS {
                continue;
            }
            let p = duality_adjoint(&c).unwrap();
            // the dual point of the Cayley line A s - C t - B u = 0
            let expected = primitive_integer(&[int_rat(f.a()), -int_rat(f.c()), -int_rat(f.b())]);
            let neg: Vec<BigInt> = expected.iter().map(|x| -x).collect();
            prop_assert!(p.to_vec() == expected || p.to_vec() == neg);
            if let Some(q) = &seen {
                prop_assert_eq!(q, &p);
            }
            seen = Some(p);
        }
    }
}
