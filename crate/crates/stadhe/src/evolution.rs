//! Lattice convergence study: evolve on successively refined grids and measure residual orders.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use sta_extensors::balance::{angular_balance_of, momentum_balance_of};
use sta_extensors::{total_charge, Local};
use sta_fields::{dhe_residual_of, evolve_dhe, LatticeField, LatticeSlice, PlaneWave, SharedField, SpacetimePoint, Superposition};

use crate::config::{build_field, EvolutionConfig, Scenario};
use crate::RunError;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub cells: usize,
    pub dz: f64,
    pub dt: f64,
    pub steps: usize,
    pub dhe: f64,
    pub momentum: f64,
    pub angular: f64,
    /// max_t |Q(t) − Q(0)|/Q(0) for Q = ∫J⁰dz.
    pub charge_drift: f64,
}

pub struct Study {
    pub rows: Vec<Row>,
    pub lattices: Vec<LatticeField>,
}

/// Least-squares slope of ln(err) against ln(dz).
pub fn fitted_order(dz: &[f64], err: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = dz.iter().zip(err).map(|(h, e)| (h.ln(), e.ln())).collect();
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (sxx, sxy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x * x, b + x * y));
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Rest wave plus one boosted mode that is periodic in z.
fn default_initial(m: f64, length: f64) -> SharedField {
    let zeta = (std::f64::consts::TAU / (m * length)).asinh();
    Arc::new(Superposition::new(vec![
        Arc::new(PlaneWave::rest(m)),
        Arc::new(PlaneWave::boosted(m, [0.0, 0.0, zeta], [0.0; 3]).with_amplitude(0.3)),
    ]))
}

fn residuals(lat: &LatticeField, scenario: &Scenario) -> Result<(f64, f64, f64), RunError> {
    let pot = scenario.potential();
    let origin = scenario.origin();
    let pts: Vec<SpacetimePoint> = lat.interior_points(2);
    let per_point = pts
        .par_iter()
        .map(|p| {
            let local = Local::at(lat, &pot, p, &origin).map_err(|e| RunError::runtime("evolution", e))?;
            let dhe = dhe_residual_of(&local.phi(), &local.ea.v, pot.m).norm();
            Ok((dhe, momentum_balance_of(&local).norm(), angular_balance_of(&local).norm()))
        })
        .collect::<Result<Vec<_>, RunError>>()?;
    Ok(per_point.iter().fold((0.0, 0.0, 0.0), |(a, b, c), (x, y, z)| (a.max(*x), b.max(*y), c.max(*z))))
}

/// `dt` overrides courant·dz on every grid when given.
pub fn convergence_study(scenario: &Scenario, base: &std::path::Path, cfg: &EvolutionConfig, dt: Option<f64>) -> Result<Study, RunError> {
    let initial = match &cfg.initial {
        Some(f) => build_field(f, scenario, base)?.field,
        None => default_initial(scenario.constants.m, cfg.length),
    };
    let pot = scenario.potential();
    let coarse = *cfg.cells.iter().min().expect("validated non-empty");
    let mut rows = Vec::new();
    let mut lattices = Vec::new();
    for &n in &cfg.cells {
        let slice = LatticeSlice::sample(initial.as_ref(), n, cfg.length, 0.0).map_err(|e| RunError::runtime("evolution", e))?;
        let dz = cfg.length / n as f64;
        let step = dt.unwrap_or(cfg.courant * dz);
        let steps = cfg.steps * n / coarse;
        let lat = evolve_dhe(&slice, &pot, step, steps).map_err(RunError::from_evolution)?;
        let (dhe, momentum, angular) = residuals(&lat, scenario)?;
        let q0 = total_charge(&lat, 0);
        let charge_drift = (0..lat.nt()).map(|it| (total_charge(&lat, it) - q0).abs() / q0.abs()).fold(0.0, f64::max);
        rows.push(Row { cells: n, dz, dt: step, steps, dhe, momentum, angular, charge_drift });
        lattices.push(lat);
    }
    Ok(Study { rows, lattices })
}

impl Study {
    pub fn order(&self, pick: impl Fn(&Row) -> f64) -> f64 {
        let dz: Vec<f64> = self.rows.iter().map(|r| r.dz).collect();
        let err: Vec<f64> = self.rows.iter().map(pick).collect();
        fitted_order(&dz, &err)
    }

    pub fn table(&self) -> String {
        let mut out = String::from("cells dz dt steps dhe momentum angular charge_drift\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{} {:e} {:e} {} {:e} {:e} {:e} {:e}\n",
                r.cells, r.dz, r.dt, r.steps, r.dhe, r.momentum, r.angular, r.charge_drift
            ));
        }
        if self.rows.len() > 1 {
            out.push_str(&format!(
                "order dhe={:.4} momentum={:.4} angular={:.4}\n",
                self.order(|r| r.dhe),
                self.order(|r| r.momentum),
                self.order(|r| r.angular)
            ));
        }
        out
    }
}
