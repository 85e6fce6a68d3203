//! RK4 streamlines of the velocity V and of the T_D(γ^0) direction field, parametrised by x⁰.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sta_bohm::polar_decompose;
use sta_core::Mv;
use sta_extensors::balance::extensor_of;
use sta_extensors::Local;
use sta_fields::{Field, PotentialSpec, SpacetimePoint};

use crate::config::TrajectoryConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Velocity,
    EnergyFlow,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Velocity => "velocity",
            Family::EnergyFlow => "energy_flow",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Polyline {
    pub family: Family,
    pub seed_index: usize,
    /// (t, x¹, x², x³) per step.
    pub points: Vec<[f64; 4]>,
    /// Why integration stopped before t_final, if it did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminated: Option<String>,
}

impl Polyline {
    pub fn to_text(&self) -> String {
        self.points.iter().map(|p| format!("{:e} {:e} {:e} {:e}\n", p[0], p[1], p[2], p[3])).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrajectoryRun {
    pub lines: Vec<Polyline>,
    /// Largest spatial distance between paired lines at equal x⁰.
    pub max_divergence: f64,
    pub early_terminations: usize,
}

/// Contravariant 4-velocity direction at `p`.
fn direction(phi: &dyn Field, pot: &PotentialSpec, family: Family, p: &SpacetimePoint) -> Result<[f64; 4], String> {
    let u: Mv = match family {
        Family::Velocity => {
            let v = phi.value(p).map_err(|e| e.to_string())?;
            let d = polar_decompose(&v).map_err(|e| e.to_string())?;
            (d.u * Mv::gamma(0) * d.u.reverse()).grade(1)
        }
        Family::EnergyFlow => {
            let local = Local::at(phi, pot, p, &SpacetimePoint::origin()).map_err(|e| e.to_string())?;
            extensor_of(&local.free_momentum_images()).adjoint().image(0)
        }
    };
    let c = u.vector_components();
    if !(c[0] > 0.0) {
        return Err(format!("direction is not future-pointing (u⁰ = {:e})", c[0]));
    }
    Ok(c)
}

fn rate(phi: &dyn Field, pot: &PotentialSpec, family: Family, t: f64, x: [f64; 3]) -> Result<[f64; 3], String> {
    let c = direction(phi, pot, family, &SpacetimePoint::new([t, x[0], x[1], x[2]]))?;
    Ok([c[1] / c[0], c[2] / c[0], c[3] / c[0]])
}

fn integrate(phi: &dyn Field, pot: &PotentialSpec, family: Family, start: [f64; 3], cfg: &TrajectoryConfig, seed_index: usize) -> Polyline {
    let steps = (cfg.t_final / cfg.dt).round() as usize;
    let h = cfg.t_final / steps as f64;
    let mut x = start;
    let mut points = vec![[0.0, x[0], x[1], x[2]]];
    let mut terminated = None;
    let add = |a: [f64; 3], b: [f64; 3], s: f64| [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]];
    for k in 0..steps {
        let t = k as f64 * h;
        let stage = || -> Result<[f64; 3], String> {
            let k1 = rate(phi, pot, family, t, x)?;
            let k2 = rate(phi, pot, family, t + 0.5 * h, add(x, k1, 0.5 * h))?;
            let k3 = rate(phi, pot, family, t + 0.5 * h, add(x, k2, 0.5 * h))?;
            let k4 = rate(phi, pot, family, t + h, add(x, k3, h))?;
            Ok(std::array::from_fn(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])))
        };
        match stage() {
            Ok(next) => {
                x = next;
                points.push([(k + 1) as f64 * h, x[0], x[1], x[2]]);
            }
            Err(e) => {
                terminated = Some(format!("t = {t}: {e}"));
                break;
            }
        }
    }
    Polyline { family, seed_index, points, terminated }
}

pub fn run_trajectories(phi: Arc<dyn Field>, pot: &PotentialSpec, cfg: &TrajectoryConfig, seed: u64) -> TrajectoryRun {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<[f64; 3]> =
        (0..cfg.seeds).map(|_| std::array::from_fn(|_| r.gen_range(-cfg.half_width..=cfg.half_width))).collect();
    let mut lines = Vec::new();
    let mut max_divergence: f64 = 0.0;
    for (i, s) in starts.iter().enumerate() {
        let v = integrate(phi.as_ref(), pot, Family::Velocity, *s, cfg, i);
        let e = integrate(phi.as_ref(), pot, Family::EnergyFlow, *s, cfg, i);
        for (a, b) in v.points.iter().zip(&e.points) {
            let d = ((a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2) + (a[3] - b[3]).powi(2)).sqrt();
            max_divergence = max_divergence.max(d);
        }
        lines.push(v);
        lines.push(e);
    }
    let early_terminations = lines.iter().filter(|l| l.terminated.is_some()).count();
    TrajectoryRun { lines, max_divergence, early_terminations }
}
