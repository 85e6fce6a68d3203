mod common;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sta_bohm::{
    half_beta, momentum_split_residual, pw_equation_residuals, pw_identities, pw_quantities, BohmError, PwGates,
    PwVariant,
};
use sta_core::Mv;
use sta_fields::{
    Field, Gaussian, Modulated, PlaneWave, PotentialFamily, PotentialSpec, ProductField, Quadratic, SharedField,
    SpacetimePoint,
};

/// β = 0 off-shell field: Gaussian envelope times a product of two phased rotors.
fn off_shell() -> SharedField {
    let a = PlaneWave::boosted(1.3, [0.4, -0.2, 0.1], [0.2, 0.0, 0.5]);
    let b = PlaneWave::boosted(0.7, [0.0, 0.3, -0.5], [0.0, -0.4, 0.1]).with_phase(0.4);
    let rotor: SharedField = Arc::new(ProductField { left: Arc::new(a), right: Arc::new(b) });
    let env = Arc::new(Gaussian { offset: 1.0, amplitude: 0.4, center: [0.1, -0.2, 0.0, 0.3], sigma: 0.9 });
    Arc::new(Modulated { envelope: env, inner: rotor })
}

/// Constant β = 0.3 applied to the off-shell field.
struct Tilted(SharedField);

impl Field for Tilted {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, sta_fields::FieldError> {
        Ok(half_beta(0.3) * self.0.value(p)?)
    }
    fn jet(&self, p: &SpacetimePoint) -> Result<sta_fields::Jet, sta_fields::FieldError> {
        Ok(sta_fields::Jet::constant(half_beta(0.3)).product(&self.0.jet(p)?))
    }
}

#[test]
fn plane_wave_quantities() {
    let w = PlaneWave::boosted(1.0, [0.3, 0.1, -0.4], [0.2, 0.0, 0.0]);
    let v = w.momentum;
    for p in common::points() {
        let q = pw_quantities(&w, &p).unwrap();
        let pu = v.vector_components();
        for mu in 0..4 {
            assert!(q.p[mu].distance(&(v * pu[mu])) < 1e-13);
            assert!(q.w[mu].max_abs() < 1e-13);
        }
        assert!(q.jbold.grade(1).max_abs() < 1e-15);
        assert_eq!(q.jbold.grades_present(1e-14), vec![3]);
        assert!((q.jbold_grade_violation - q.jbold.norm()).abs() < 1e-15);
    }
}

#[test]
fn equations_vanish_on_plane_and_boosted_waves() {
    let pot = PotentialSpec::free(1.0);
    let gates = PwGates::default();
    let waves = [PlaneWave::rest(1.0), PlaneWave::boosted(1.0, [0.6, -0.3, 0.2], [0.1, 0.7, -0.2])];
    for w in &waves {
        for p in common::points() {
            for v in [PwVariant::Rederived, PwVariant::AsPrinted] {
                let r = pw_equation_residuals(w, &pot, &p, v, &gates).unwrap();
                assert!(r.max_abs() < 1e-10, "{v:?} {r:?}");
            }
        }
    }
}

#[test]
fn grade_obligations_on_beta_free_superposition() {
    let psi = common::x_boosted_waves();
    let pot = PotentialSpec::free(common::M);
    let gates = PwGates::default();
    let mut printed_worst: f64 = 0.0;
    let mut w_size: f64 = 0.0;
    for p in common::points() {
        let q = pw_quantities(&psi, &p).unwrap();
        assert!(q.beta.abs() < 1e-14);
        w_size = w_size.max(q.w.iter().map(|w| w.max_abs()).fold(0.0, f64::max));
        let r = pw_equation_residuals(&psi, &pot, &p, PwVariant::Rederived, &gates).unwrap();
        assert!(r.max_abs() < 1e-10, "{r:?}");
        let printed = pw_equation_residuals(&psi, &pot, &p, PwVariant::AsPrinted, &gates).unwrap();
        printed_worst = printed_worst.max(printed.scalar.abs()).max(printed.bivector.max_abs());
    }
    assert!(w_size > 1e-2);
    assert!(printed_worst > 1e-3, "printed coefficients fit too: {printed_worst:e}");
}

#[test]
fn beta_factor_is_required() {
    let field = Tilted(off_shell());
    for p in common::points() {
        let with = momentum_split_residual(&field, &p, true).unwrap();
        let without = momentum_split_residual(&field, &p, false).unwrap();
        assert!(with.iter().all(|r| r.max_abs() < 1e-12));
        assert!(without.iter().map(|r| r.max_abs()).fold(0.0, f64::max) > 1e-2);
    }
    let mixed = common::mixed_waves();
    for p in common::points() {
        assert!(momentum_split_residual(&mixed, &p, true).unwrap().iter().all(|r| r.max_abs() < 1e-12));
    }
}

#[test]
fn off_shell_identities() {
    let field = off_shell();
    let mut doubled: f64 = 0.0;
    for p in common::points() {
        let id = pw_identities(&field, &p, 1e-10).unwrap();
        assert!(id.sum.max_abs() < 1e-11, "{:e}", id.sum.max_abs());
        assert!(id.difference.max_abs() < 1e-11, "{:e}", id.difference.max_abs());
        doubled = doubled.max(id.difference_doubled.max_abs());
    }
    assert!(doubled > 1e-2);
}

#[test]
fn gates() {
    let gates = PwGates::default();
    let p = SpacetimePoint::new([0.1, 0.2, -0.1, 0.3]);
    let w = PlaneWave::rest(1.0);
    let chi = Arc::new(Quadratic::linear([0.0, 0.1, 0.0, 0.0]));
    let pot = PotentialSpec::new(PotentialFamily::PureGauge(chi), 0.5, 1.0);
    assert!(matches!(pw_equation_residuals(&w, &pot, &p, PwVariant::Rederived, &gates), Err(BohmError::NotFree)));
    let free = PotentialSpec::free(1.0);
    let mixed = common::mixed_waves();
    assert!(matches!(
        pw_equation_residuals(&mixed, &free, &p, PwVariant::Rederived, &gates),
        Err(BohmError::NonzeroBeta { .. })
    ));
    assert!(matches!(
        pw_equation_residuals(&off_shell(), &free, &p, PwVariant::Rederived, &gates),
        Err(BohmError::NotASolution { .. })
    ));
    assert!(matches!(pw_identities(&Tilted(off_shell()), &p, 1e-10), Err(BohmError::NonzeroBeta { .. })));
}

fn random_grade(r: &mut ChaCha8Rng, k: usize) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0))).grade(k)
}

#[test]
fn trivector_lemmas() {
    let mut r = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..300 {
        let a = random_grade(&mut r, 1);
        let t = random_grade(&mut r, 3);
        let u = random_grade(&mut r, 3);
        assert!((a * t + t * a).distance(&(a.left_contract(&t) * 2.0)) < 1e-13);
        assert!((a * t - t * a).distance(&(a.wedge(&t) * 2.0)) < 1e-13);
        let tu = t * u;
        assert!((tu - tu.grade(0) - tu.grade(2)).max_abs() < 1e-14);
        assert!((tu.grade(2) + (u * t).grade(2)).max_abs() < 1e-13);
        assert!((t * t).grade(2).max_abs() < 1e-14);
        assert!((t.left_contract(&u).scalar_part() - tu.scalar_part()).abs() < 1e-14);
    }
}
