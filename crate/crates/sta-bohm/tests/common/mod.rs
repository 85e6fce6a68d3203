#![allow(dead_code)]

use std::sync::Arc;

use sta_core::{g21, gamma5, Mv};
use sta_fields::{Field, PlaneWave, SharedField, SpacetimePoint, Superposition};

pub const M: f64 = 1.0;

pub fn wave(rapidity: [f64; 3], rotation: [f64; 3], amp: f64, phase: f64) -> SharedField {
    Arc::new(
        PlaneWave::boosted(M, rapidity, rotation)
            .with_amplitude(amp)
            .with_phase(phase),
    )
}

/// A free solution with β ≠ 0 at generic points.
pub fn mixed_waves() -> SharedField {
    Arc::new(Superposition::new(vec![
        wave([0.0, 0.0, 0.0], [0.0; 3], 1.0, 0.0),
        wave([0.3, -0.2, 0.5], [0.1, 0.4, -0.2], 0.6, 0.7),
    ]))
}

/// Two waves boosted along x¹ only: ψψ̃ stays scalar and positive, so β = 0 everywhere while W ≠ 0.
pub fn x_boosted_waves() -> SharedField {
    Arc::new(Superposition::new(vec![
        wave([0.5, 0.0, 0.0], [0.0; 3], 1.0, 0.0),
        wave([-0.4, 0.0, 0.0], [0.0; 3], 0.4, 0.3),
    ]))
}

pub fn points() -> Vec<SpacetimePoint> {
    (0..12)
        .map(|i| {
            let t = i as f64;
            SpacetimePoint::new([
                0.3 * (t * 0.7).sin(),
                0.5 * (t * 1.3).cos(),
                -0.4 + 0.07 * t,
                0.2 * (t * 2.1).sin(),
            ])
        })
        .collect()
}

/// ∂_μ f by a sixth-order central difference of values only.
pub fn fd<T>(f: impl Fn(&SpacetimePoint) -> T, p: &SpacetimePoint, mu: usize, h: f64) -> T
where
    T: std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T>,
{
    let at = |k: f64| f(&p.shifted(mu, k * h));
    ((at(1.0) - at(-1.0)) * 45.0 - (at(2.0) - at(-2.0)) * 9.0 + (at(3.0) - at(-3.0)))
        * (1.0 / (60.0 * h))
}

/// β from the value alone.
pub fn beta_of(phi: &Mv) -> f64 {
    let q = *phi * phi.reverse();
    q.pseudoscalar_part().atan2(q.scalar_part())
}

fn exp_scalar(b: Mv, t: f64) -> Mv {
    let s2 = (b * b).scalar_part();
    if s2 < 0.0 {
        let w = (-s2).sqrt() * t;
        Mv::scalar(w.cos()) + b * (w.sin() / (-s2).sqrt())
    } else {
        Mv::scalar(1.0)
    }
}

/// Quantum potential ⟨−(∂lnψ₀)X + ½γ_5(∂β)X⟩₁ assembled from value finite differences.
pub fn q_rederived_oracle(
    psi: &dyn Field,
    s: &dyn Fn(&SpacetimePoint) -> f64,
    p: &SpacetimePoint,
) -> Mv {
    let h = 1e-3;
    let psi0 = |x: &SpacetimePoint| {
        let v = psi.value(x).unwrap();
        v * exp_scalar(g21::<f64>(), -s(x)) * exp_scalar(gamma5::<f64>(), -0.5 * beta_of(&v))
    };
    let v = psi.value(p).unwrap();
    let inv0 = psi0(p).invert_spinor().unwrap();
    let x = v * g21::<f64>() * v.invert_spinor().unwrap();
    let dln: Mv = (0..4)
        .map(|mu| Mv::gamma_up(mu) * fd(&psi0, p, mu, h) * inv0)
        .sum();
    let db: Mv = (0..4)
        .map(|mu| {
            Mv::gamma_up(mu)
                * fd(
                    |y: &SpacetimePoint| beta_of(&psi.value(y).unwrap()),
                    p,
                    mu,
                    h,
                )
        })
        .sum();
    (-(dln * x) + gamma5::<f64>() * db * x * 0.5).grade(1)
}
