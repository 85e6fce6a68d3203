mod common;

use std::sync::Arc;

use sta_bohm::{
    constraint_residual, effective_mass, ghje_residual, ghje_terms, takabayashi, BohmError,
    ConstraintVariant, QVariant, BETA_FLOOR,
};
use sta_core::Mv;
use sta_fields::{
    Field, GaugeDressed, PotentialFamily, PotentialSpec, Quadratic, ScalarField, SpacetimePoint,
    Volkov,
};

fn arbitrary_phase() -> Quadratic {
    Quadratic::new(
        0.2,
        [0.4, -0.3, 0.0, 0.1],
        [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.15],
            [0.0; 4],
            [0.0, 0.15, 0.0, 0.0],
        ],
    )
}

#[test]
fn rederived_equation_closes_on_mixed_solution() {
    let psi = common::mixed_waves();
    let pot = PotentialSpec::free(common::M);
    let s = arbitrary_phase();
    let mut printed_worst: f64 = 0.0;
    for p in common::points() {
        let t = ghje_terms(&psi, &s, &pot, &p).unwrap();
        assert!(t.beta.abs() > 1e-3);
        assert!(t.residual(QVariant::Rederived).unwrap().max_abs() < 1e-12);
        assert!(
            t.constraint(ConstraintVariant::Rederived)
                .unwrap()
                .max_abs()
                < 1e-12
        );
        printed_worst = printed_worst.max(t.residual(QVariant::DBeta).unwrap().max_abs());
        assert!((t.v * t.v).distance(&Mv::one()) < 1e-12);
    }
    assert!(
        printed_worst > 1e-2,
        "printed form unexpectedly closes: {printed_worst:e}"
    );
}

#[test]
fn quantum_potential_matches_value_oracle() {
    let psi = common::mixed_waves();
    let pot = PotentialSpec::free(common::M);
    let s = arbitrary_phase();
    for p in common::points().into_iter().take(5) {
        let q = ghje_terms(&psi, &s, &pot, &p)
            .unwrap()
            .quantum_potential(QVariant::Rederived)
            .unwrap();
        let oracle = common::q_rederived_oracle(&psi, &|x| s.value(x), &p);
        assert!(q.distance(&oracle) < 1e-8, "{:e}", q.distance(&oracle));
    }
}

#[test]
fn rederived_equation_with_gauge_and_wave_potentials() {
    let e = 0.6;
    let chi = Arc::new(Quadratic::new(
        0.0,
        [0.1, 0.0, 0.3, 0.0],
        [[0.2, 0.0, 0.0, 0.0], [0.0; 4], [0.0; 4], [0.0; 4]],
    ));
    let dressed = GaugeDressed {
        inner: common::mixed_waves(),
        chi: chi.clone(),
        e,
    };
    let pot = PotentialSpec::new(PotentialFamily::PureGauge(chi), e, common::M);
    let s = arbitrary_phase();
    for p in common::points() {
        let r = ghje_residual(&dressed, &s, &pot, &p, QVariant::Rederived).unwrap();
        assert!(r.max_abs() < 1e-12);
    }

    let k = Mv::vector([1.0, 0.0, 0.0, 1.0]) * 0.8;
    let eps = Mv::vector([0.0, 1.0, 0.0, 0.0]) * 0.5;
    let volkov = Volkov::new(common::M, [0.2, 0.0, -0.1], [0.0, 0.3, 0.0], k, eps, 0.9);
    let pot = PotentialSpec::new(
        PotentialFamily::Custom(Arc::new(volkov.potential())),
        0.9,
        common::M,
    );
    for p in common::points() {
        let r = ghje_residual(&volkov, &s, &pot, &p, QVariant::Rederived).unwrap();
        assert!(r.max_abs() < 1e-11, "{:e}", r.max_abs());
    }
}

#[test]
fn literal_variant_domain() {
    let psi = common::mixed_waves();
    let pot = PotentialSpec::free(common::M);
    let s = arbitrary_phase();
    let (mut pos, mut neg) = (0, 0);
    for p in common::points() {
        let t = ghje_terms(&psi, &s, &pot, &p).unwrap();
        match t.quantum_potential(QVariant::Literal) {
            Ok(q) => {
                assert!(t.beta > BETA_FLOOR && q.is_finite());
                pos += 1;
            }
            Err(BohmError::BetaDomain { beta }) => {
                assert!(beta <= BETA_FLOOR);
                neg += 1;
            }
            Err(other) => panic!("{other}"),
        }
        let c = constraint_residual(&psi, &s, &pot, &p, ConstraintVariant::AsPrinted);
        assert_eq!(c.is_err(), t.beta <= BETA_FLOOR);
        let c = constraint_residual(&psi, &s, &pot, &p, ConstraintVariant::Mass);
        assert_eq!(c.is_err(), t.beta <= BETA_FLOOR);
    }
    assert_eq!(pos + neg, 12);
}

#[test]
fn effective_mass_tracks_beta() {
    let psi = common::mixed_waves();
    for p in common::points() {
        let beta = takabayashi(&psi.value(&p).unwrap()).1;
        let m_eff = effective_mass(&psi, 2.0, &p).unwrap();
        assert!((m_eff - 2.0 * beta.cos()).abs() < 1e-15);
    }
    let odd = sta_fields::ConstantField(Mv::gamma(1));
    assert!(effective_mass(&odd, 1.0, &SpacetimePoint::origin()).is_err());
}
