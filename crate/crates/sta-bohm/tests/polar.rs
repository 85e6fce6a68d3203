use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sta_bohm::{half_beta, polar_decompose, BohmError};
use sta_core::{g21, gamma5, AlgebraError, Mv};
use sta_fields::{boost_rotor, rotation_rotor, FieldError};

fn random_even(r: &mut ChaCha8Rng) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0))).even()
}

#[test]
fn worked_decompositions() {
    let d = polar_decompose(&Mv::one()).unwrap();
    assert_eq!((d.r, d.beta), (1.0, 0.0));
    assert_eq!(d.u, Mv::one());

    let d = polar_decompose(&gamma5()).unwrap();
    assert_eq!(d.beta, PI);
    assert!(d.u.distance(&Mv::one()) < 1e-15);

    let rotor = boost_rotor([0.2, -0.1, 0.4]) * rotation_rotor([0.3, 0.0, -0.5]);
    let phi = half_beta(0.6) * rotor * 2.0;
    let d = polar_decompose(&phi).unwrap();
    assert!((d.r - 2.0).abs() < 1e-14);
    assert!((d.beta - 0.6).abs() < 1e-14);
    assert!(d.u.distance(&rotor) < 1e-14);
}

#[test]
fn random_spinors_recompose_with_unit_rotor() {
    let mut r = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..500 {
        let phi = random_even(&mut r);
        let d = polar_decompose(&phi).unwrap();
        assert!(d.beta > -PI && d.beta <= PI);
        assert!(d.recompose().distance(&phi) < 1e-13 * (1.0 + phi.norm()));
        assert!((d.u * d.u.reverse()).distance(&Mv::one()) < 1e-13);
    }
}

#[test]
fn sign_and_pseudoscalar_branches() {
    let mut r = ChaCha8Rng::seed_from_u64(37);
    let mut wrapped = 0;
    for _ in 0..200 {
        let phi = random_even(&mut r);
        let d = polar_decompose(&phi).unwrap();

        // φ → −φ leaves ρ and β and flips U
        let n = polar_decompose(&-phi).unwrap();
        assert_eq!(n.beta, d.beta);
        assert!(n.u.distance(&-d.u) < 1e-13);

        // φ → γ_5φ shifts β by π; U survives unless β + π leaves (−π, π]
        let g = polar_decompose(&(gamma5::<f64>() * phi)).unwrap();
        let (expect_beta, expect_u) = if d.beta + PI > PI {
            (d.beta - PI, -d.u)
        } else {
            (d.beta + PI, d.u)
        };
        wrapped += usize::from(d.beta > 0.0);
        assert!(
            (g.beta - expect_beta).abs() < 1e-13,
            "{} vs {}",
            g.beta,
            expect_beta
        );
        assert!(g.u.distance(&expect_u) < 1e-13);
        assert!((g.r - d.r).abs() < 1e-13);
    }
    assert!(wrapped > 50 && wrapped < 150);
}

#[test]
fn rejections() {
    assert!(matches!(
        polar_decompose(&Mv::gamma(2)),
        Err(BohmError::Field(FieldError::NotEven { .. }))
    ));
    // (1 + γ_0γ_3)(1 − γ_0γ_3) = 0
    let null = Mv::one() + Mv::gamma(0) * Mv::gamma(3);
    assert!(matches!(
        polar_decompose(&null),
        Err(BohmError::Algebra(AlgebraError::SingularSpinor { .. }))
    ));
}

#[test]
fn phase_does_not_touch_beta() {
    let phi = half_beta(-1.1) * boost_rotor([0.5, 0.0, 0.0]) * 0.7;
    let d0 = polar_decompose(&phi).unwrap();
    let d1 =
        polar_decompose(&(phi * (g21::<f64>() * 0.8).exp_commuting_square().unwrap())).unwrap();
    assert!((d0.beta - d1.beta).abs() < 1e-14);
    assert!((d0.beta + 1.1).abs() < 1e-14);
}
