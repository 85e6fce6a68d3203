mod common;

use common::{filtered, random_even, random_grade, random_mv, random_odd, rng, word};
use proptest::prelude::*;
use sta_core::{g21, gamma5, table, AlgebraError, Mv, Mv32};

fn close(a: &Mv, b: &Mv, tol: f64) -> bool {
    a.distance(b) <= tol * (1.0 + a.norm().max(b.norm()))
}

#[test]
fn blade_table_matches_reference_for_every_pair() {
    for a in 0..16 {
        for b in 0..16 {
            let (s, k) = common::blade_product(a, b);
            assert_eq!(Mv::blade(a) * Mv::blade(b), Mv::blade(k) * s, "blades {a:04b} {b:04b}");
        }
    }
}

#[test]
fn anticommutator_of_basis_vectors_is_twice_metric() {
    let eta = [1.0, -1.0, -1.0, -1.0];
    for mu in 0..4 {
        for nu in 0..4 {
            let (a, b) = (Mv::gamma(mu), Mv::gamma(nu));
            let expect = if mu == nu { 2.0 * eta[mu] } else { 0.0 };
            assert_eq!(a * b + b * a, Mv::scalar(expect));
        }
    }
}

#[test]
fn worked_products() {
    assert_eq!(Mv::gamma(0) * Mv::gamma(0), Mv::one());
    let g12 = Mv::gamma(1) * Mv::gamma(2);
    assert_eq!(g12, -(Mv::gamma(2) * Mv::gamma(1)));
    assert_eq!(g12.grades_present(0.0), vec![2]);
    assert_eq!(gamma5::<f64>() * gamma5(), Mv::scalar(-1.0));
    let g5_ref = word(&[0, 1, 2, 3]) * -1.0;
    assert_eq!(gamma5::<f64>(), g5_ref);
}

#[test]
fn grade_projection_examples() {
    let a = Mv::one() + Mv::gamma(0) + Mv::blade(0b0011);
    assert_eq!(a.grade(1), Mv::gamma(0));
    assert_eq!(gamma5::<f64>().grade(4), gamma5());
    let triple = Mv::gamma(0) * Mv::gamma(1) * Mv::gamma(0);
    assert_eq!(triple.grade(1), word(&[0, 1, 0]));
    assert_eq!(triple.grade(1), -Mv::gamma(1));
}

#[test]
#[should_panic]
fn grade_out_of_range_panics() {
    let _ = Mv::one().grade(5);
}

#[test]
fn reverse_examples() {
    assert_eq!(Mv::blade(0b0011).reverse(), -Mv::blade(0b0011));
    assert_eq!(Mv::blade(0b0111).reverse(), -Mv::blade(0b0111));
    let a = Mv::one() + gamma5();
    assert_eq!(a.reverse(), a);
}

#[test]
fn contraction_examples() {
    let g0 = Mv::gamma(0);
    assert_eq!(g0.wedge(&g0), Mv::zero());
    let g01 = g0.wedge(&Mv::gamma(1));
    let expect = filtered(&g0, &g01, |r, s, g| s >= r && g == s - r);
    assert_eq!(g0.left_contract(&g01), expect);
    assert_eq!(g0.left_contract(&g01), Mv::gamma(1));
    assert_eq!(Mv::gamma(1).scalar_product(&Mv::gamma(1)), -1.0);
}

#[test]
fn exp_examples() {
    assert_eq!(Mv::zero().exp_commuting_square().unwrap(), Mv::one());
    let th = 0.7_f64;
    let e = (g21::<f64>() * th).exp_commuting_square().unwrap();
    assert!(close(&e, &(Mv::scalar(th.cos()) + g21::<f64>() * th.sin()), 1e-15));
    let beta = 1.3_f64;
    let e5 = (gamma5::<f64>() * (beta / 2.0)).exp_commuting_square().unwrap();
    let expect = Mv::scalar((beta / 2.0).cos()) + gamma5::<f64>() * (beta / 2.0).sin();
    assert!(close(&e5, &expect, 1e-15));
    let boost = (Mv::blade(0b1001) * 0.4).exp_commuting_square().unwrap();
    assert!(close(&boost, &(Mv::scalar(0.4f64.cosh()) + Mv::blade(0b1001) * 0.4f64.sinh()), 1e-15));
}

#[test]
fn exp_rejects_non_scalar_square_and_series_agrees() {
    let a = Mv::gamma(0) + Mv::blade(0b0110);
    match a.exp_commuting_square() {
        Err(AlgebraError::NonScalarSquare { residual }) => assert!(residual > 0.1),
        other => panic!("unexpected {other:?}"),
    }
    let b = g21::<f64>() * 0.9;
    assert!(close(&b.exp_series(30), &b.exp_commuting_square().unwrap(), 1e-14));
}

#[test]
fn invert_spinor_examples() {
    assert_eq!(Mv::scalar(2.0).invert_spinor().unwrap(), Mv::scalar(0.5));
    assert_eq!(gamma5::<f64>().invert_spinor().unwrap(), -gamma5::<f64>());
    let th = 0.3;
    let r = (g21::<f64>() * th).exp_commuting_square().unwrap();
    let r_inv = (g21::<f64>() * -th).exp_commuting_square().unwrap();
    assert!(close(&r.invert_spinor().unwrap(), &r_inv, 1e-15));
    assert!(matches!(Mv::gamma(0).invert_spinor(), Err(AlgebraError::NotEven { .. })));
    let null = Mv::one() + Mv::blade(0b0011);
    assert!(matches!(null.invert_spinor(), Err(AlgebraError::SingularSpinor { .. })));
}

#[test]
fn random_products_match_reference() {
    let mut r = rng(7);
    for _ in 0..1000 {
        let (a, b) = (random_mv(&mut r), random_mv(&mut r));
        assert!(close(&(a * b), &common::product(&a, &b), 1e-14));
    }
}

#[test]
fn odd_grade_identities() {
    let mut r = rng(11);
    for _ in 0..500 {
        let o = random_odd(&mut r);
        assert_eq!(o.grade(1), (o + o.reverse()) * 0.5);
        assert_eq!(o.grade(3), (o - o.reverse()) * 0.5);
    }
}

#[test]
fn graded_product_rules() {
    let mut r = rng(13);
    for _ in 0..500 {
        for ra in 0..=4 {
            for sb in 0..=4 {
                let a = random_grade(&mut r, ra);
                let b = random_grade(&mut r, sb);
                let p = a * b;
                let lo = ra.abs_diff(sb);
                for k in 0..=4 {
                    let allowed = k >= lo && k <= ra + sb && (k - lo) % 2 == 0;
                    if !allowed {
                        assert!(p.grade(k).norm() < 1e-14, "{ra} {sb} -> {k}");
                    }
                }
                // wedge commutation with sign (−1)^{rs}
                let sign = if (ra * sb) % 2 == 0 { 1.0 } else { -1.0 };
                assert!(close(&a.wedge(&b), &(b.wedge(&a) * sign), 1e-14));
                // left contraction against right contraction: (−1)^{r(s−1)}
                if ra <= sb {
                    let sign = if (ra * (sb + 1)) % 2 == 0 { 1.0 } else { -1.0 };
                    assert!(close(&a.left_contract(&b), &(b.right_contract(&a) * sign), 1e-14));
                }
            }
        }
    }
}

#[test]
fn reversed_grade_projection() {
    let mut r = rng(17);
    for _ in 0..500 {
        let (a, c) = (random_mv(&mut r), random_mv(&mut r));
        for k in 0..=4 {
            let sign = if k % 4 < 2 { 1.0 } else { -1.0 };
            let lhs = (a * c).grade(k);
            let rhs = (c.reverse() * a.reverse()).grade(k) * sign;
            assert!(close(&lhs, &rhs, 1e-14));
        }
    }
}

#[test]
fn scalar_product_remark() {
    let mut r = rng(19);
    for _ in 0..500 {
        for k in 0..=4 {
            let b = random_grade(&mut r, k);
            let c = random_grade(&mut r, k);
            let contraction = b.left_contract(&c).scalar_part();
            assert!((contraction - b.reverse().scalar_product(&c)).abs() < 1e-14);
            assert!((b.scalar_product(&c) - c.scalar_product(&b)).abs() < 1e-14);
            let other = random_grade(&mut r, (k + 1) % 5);
            assert_eq!(b.scalar_product(&other), 0.0);
        }
    }
}

#[test]
fn inverse_of_random_even_spinor() {
    let mut r = rng(23);
    for _ in 0..200 {
        let phi = random_even(&mut r);
        let inv = phi.invert_spinor().unwrap();
        assert!(close(&(phi * inv), &Mv::one(), 1e-11));
        assert!(close(&(inv * phi), &Mv::one(), 1e-11));
    }
}

#[test]
fn single_precision_algebra() {
    let g = Mv32::gamma(2);
    assert_eq!(g * g, Mv32::scalar(-1.0));
    let e = (g21::<f32>() * 0.5).exp_commuting_square().unwrap();
    assert!((e.scalar_part() - 0.5f32.cos()).abs() < 1e-6);
    assert_eq!(table::SIGN[0b0011][0b0011], 1);
}

fn arb_mv() -> impl Strategy<Value = Mv> {
    prop::array::uniform16(-2.0f64..2.0).prop_map(Mv::from_coeffs)
}

proptest! {
    #[test]
    fn associativity(a in arb_mv(), b in arb_mv(), c in arb_mv()) {
        prop_assert!(close(&((a * b) * c), &(a * (b * c)), 1e-13));
    }

    #[test]
    fn reverse_is_anti_automorphism(a in arb_mv(), b in arb_mv()) {
        prop_assert!(close(&(a * b).reverse(), &(b.reverse() * a.reverse()), 1e-14));
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn grades_reconstruct(a in arb_mv()) {
        let sum: Mv = (0..=4).map(|k| a.grade(k)).sum();
        prop_assert_eq!(sum, a);
        for k in 0..=4 {
            prop_assert_eq!(a.grade(k).reverse(), a.reverse().grade(k));
        }
    }

    #[test]
    fn display_is_stable(a in arb_mv()) {
        prop_assert_eq!(a.to_string(), a.to_string());
    }
}
