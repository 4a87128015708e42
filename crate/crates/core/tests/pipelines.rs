//! End-to-end runs through the library on the two worked examples, and
//! properties of the Hermitian discriminant.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use weil_core::hermitian::{discriminant, hermitian_matrix};
use weil_core::hodge::pfaffian;
use weil_core::rat::{int_rat, rat, ratio, squarefree_part};
use weil_core::weil::{classify, eigenforms, find_k, membership, StratumTag};
use weil_core::{cycle_classes, elementary_divisors_symplectic, solve_membership_family};
use weil_core::{B1Class, CartanForm, Rat};

#[test]
fn schoen_pipeline() {
    let cc = cycle_classes();
    let f = find_k(&cc.schoen2).unwrap().cartan;
    assert_eq!(f, CartanForm::from_i64(1, 1, 1).unwrap());
    assert_eq!(f.field_name(), "Q(sqrt(-3))");
    let omega_k = eigenforms(&f).omega_k;
    assert_eq!(omega_k, B1Class::from_i64(2, -1, 2));
    assert_eq!(pfaffian(&omega_k, 2).unwrap(), rat(9));
    assert_eq!(elementary_divisors_symplectic(&omega_k).unwrap(), [1, 1, 3, 3].map(BigInt::from));
    assert!(discriminant(&f, &omega_k).unwrap().trivial);
}

#[test]
fn gaussian_pipeline() {
    let cc = cycle_classes();
    let f = CartanForm::from_i64(1, 0, 1).unwrap();
    let sol = solve_membership_family(&cc.t, &[cc.s1.clone(), cc.s_minus1.clone()], &f).unwrap();
    assert_eq!(sol.particular, vec![rat(1), rat(1)]);
    assert!(sol.directions.is_empty());
    let c = cc.t.add(&cc.s1).add(&cc.s_minus1);
    assert!(membership(&c, &f));
    assert_eq!(classify(&c), StratumTag::OnZminusS);
    assert_eq!(find_k(&c).unwrap().cartan, f);
}

fn imaginary() -> impl Strategy<Value = CartanForm> {
    (1i64..=8, -8i64..=8, 1i64..=8)
        .prop_filter("imaginary", |(a, b, c)| b * b < 4 * a * c)
        .prop_map(|(a, b, c)| CartanForm::from_i64(a, b, c).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_filter_map("zero", |(n, d)| (n != 0).then(|| ratio(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn discriminants_are_trivial(f in imaginary(), lambda in nonzero_rat()) {
        let theta = eigenforms(&f).omega_k.scale(&lambda);
        let r = discriminant(&f, &theta).unwrap();
        prop_assert!(r.trivial);
        // d is the squarefree kernel of -Delta
        prop_assert_eq!(int_rat(&-r.d.clone()), int_rat(&squarefree_part(&f.discriminant()).unwrap()));
    }

    #[test]
    fn determinant_is_a1_to_the_fourth_times_d_squared(f in imaginary(), lambda in nonzero_rat()) {
        let theta = eigenforms(&f).omega_k.scale(&lambda);
        let psi = hermitian_matrix(&f, &theta).unwrap();
        let a1 = theta.a.clone();
        let d = int_rat(psi.d());
        prop_assert_eq!(psi.det(), &a1 * &a1 * &a1 * &a1 * &d * &d);
    }

    #[test]
    fn hermitian_and_homogeneous(f in imaginary(), lambda in nonzero_rat()) {
        let theta = eigenforms(&f).omega_k;
        let psi = hermitian_matrix(&f, &theta).unwrap();
        for (i, row) in psi.entries().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                prop_assert_eq!(x, &psi.entries()[j][i].conj());
            }
        }
        let scaled = hermitian_matrix(&f, &theta.scale(&lambda)).unwrap();
        let l2 = &lambda * &lambda;
        prop_assert_eq!(scaled.det(), psi.det() * &l2 * &l2);
        prop_assert!(!psi.det().is_zero() && psi.det().is_positive());
    }
}
