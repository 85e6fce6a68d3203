//! Analytic solutions shared by the balance-law tests.
#![allow(dead_code)]

use std::sync::Arc;

use sta_core::Mv;
use sta_fields::{
    Field, GaugeDressed, PlaneWave, PotentialFamily, PotentialSpec, Quadratic, SampleBox, SpacetimePoint, Superposition,
    Volkov,
};

pub struct Scenario {
    pub name: &'static str,
    pub phi: Arc<dyn Field>,
    pub pot: PotentialSpec,
}

pub fn two_waves(m: f64) -> Arc<dyn Field> {
    Arc::new(Superposition::new(vec![
        Arc::new(PlaneWave::boosted(m, [0.4, 0.0, 0.2], [0.3, 0.0, 0.0])),
        Arc::new(PlaneWave::boosted(m, [-0.3, 0.5, 0.0], [0.0, 1.1, 0.2]).with_amplitude(0.6).with_phase(0.5)),
    ]))
}

/// Two-wave superposition dressed by χ = k x¹ with e·k = 0.1.
pub fn aharonov_bohm(e: f64) -> Scenario {
    let m = 1.0;
    let chi = Arc::new(Quadratic::linear([0.0, 0.1 / 0.5, 0.0, 0.0]));
    Scenario {
        name: "pure gauge",
        phi: Arc::new(GaugeDressed { inner: two_waves(m), chi: chi.clone(), e }),
        pot: PotentialSpec::new(PotentialFamily::PureGauge(chi), e, m),
    }
}

pub fn curved_gauge() -> Scenario {
    let (m, e) = (1.3, 0.7);
    let chi = Arc::new(Quadratic::new(0.0, [0.0, 0.3, 0.0, 0.0], [[0.0, 0.0, 0.2, 0.0], [0.0; 4], [0.2, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.2]]));
    Scenario {
        name: "dressed superposition",
        phi: Arc::new(GaugeDressed { inner: two_waves(m), chi: chi.clone(), e }),
        pot: PotentialSpec::new(PotentialFamily::PureGauge(chi), e, m),
    }
}

pub fn volkov() -> Scenario {
    let (m, e) = (1.0, 0.9);
    let v = Volkov::new(m, [0.2, -0.1, 0.3], [0.4, 0.0, 0.1], Mv::vector([1.2, 0.0, 0.0, 1.2]), Mv::vector([0.0, 0.7, -0.4, 0.0]), e);
    Scenario { name: "volkov", phi: Arc::new(v), pot: PotentialSpec::new(PotentialFamily::Custom(Arc::new(v.potential())), e, m) }
}

pub fn all() -> Vec<Scenario> {
    let m = 1.1;
    vec![
        Scenario { name: "rest", phi: Arc::new(PlaneWave::rest(m)), pot: PotentialSpec::free(m) },
        Scenario { name: "boosted", phi: Arc::new(PlaneWave::boosted(m, [0.5, -0.2, 0.8], [1.0, 0.3, -0.5])), pot: PotentialSpec::free(m) },
        Scenario { name: "superposition", phi: two_waves(m), pot: PotentialSpec::free(m) },
        aharonov_bohm(0.5),
        curved_gauge(),
        volkov(),
    ]
}

pub fn points(n: usize) -> Vec<SpacetimePoint> {
    SampleBox::cube(2.0).halton(n)
}
