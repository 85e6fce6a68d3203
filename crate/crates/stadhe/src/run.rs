//! Entry points behind the CLI verbs.

use std::fs;
use std::path::Path;

use crate::config::{build_field, Scenario};
use crate::evolution::{convergence_study, Study};
use crate::report::{Conventions, Header, Report, SCHEMA};
use crate::suites::{Context, Suite};
use crate::trajectories::{run_trajectories, TrajectoryRun};
use crate::RunError;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Overrides the scenario's suite list.
    pub suite: Option<String>,
    /// Per-axis grid instead of the scenario's Halton points.
    pub grid: Option<usize>,
    /// Finite-difference step for the two-engine comparison.
    pub step: Option<f64>,
    pub tol_scale: f64,
    /// Overrides the scenario seed.
    pub seed: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { suite: None, grid: None, step: None, tol_scale: 1.0, seed: None }
    }
}

pub fn verify(scenario: &Scenario, base: &Path, opts: &VerifyOptions) -> Result<Report, RunError> {
    if !(opts.tol_scale.is_finite() && opts.tol_scale > 0.0) {
        return Err(RunError::Config { key: "--tol-scale".into(), message: "must be a positive number".into() });
    }
    if let Some(h) = opts.step {
        if !(h.is_finite() && h > 0.0) {
            return Err(RunError::Config { key: "--step".into(), message: "must be a positive number".into() });
        }
    }
    let mut suites = Vec::new();
    match &opts.suite {
        Some(s) => suites = Suite::parse(s).map_err(|m| RunError::Config { key: "--suite".into(), message: m })?,
        None => {
            for s in &scenario.suites {
                suites.extend(Suite::parse(s).map_err(|m| RunError::Config { key: "suites".into(), message: m })?);
            }
        }
    }
    suites.sort();
    suites.dedup();
    let seed = opts.seed.unwrap_or(scenario.seed);
    let mut ctx = Context::new(scenario, base.to_path_buf(), opts.grid, opts.tol_scale, seed, opts.step)?;
    for s in suites {
        ctx.run(s)?;
    }
    let header = Header {
        schema: SCHEMA.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        scenario: scenario.name.clone(),
        seed,
        tol_scale: opts.tol_scale,
        conventions: Conventions::new(scenario.variants),
    };
    Ok(Report::new(header, ctx.checks, ctx.not_applicable))
}

/// Runs the convergence study and writes snapshots plus `convergence.txt` into `out`.
pub fn evolve(scenario: &Scenario, base: &Path, dt: Option<f64>, out: &Path) -> Result<Study, RunError> {
    let cfg = scenario.evolution.clone().unwrap_or_default();
    let study = convergence_study(scenario, base, &cfg, dt).map_err(|e| match e {
        RunError::Unsupported(m) => RunError::Config { key: "potential".into(), message: m },
        other => other,
    })?;
    fs::create_dir_all(out).map_err(io)?;
    for (row, lat) in study.rows.iter().zip(&study.lattices) {
        for it in [0, lat.nt() - 1] {
            let path = out.join(format!("cells{}_step{}.snap", row.cells, it));
            let file = fs::File::create(&path).map_err(io)?;
            lat.snapshot(it).write_to(std::io::BufWriter::new(file)).map_err(io)?;
        }
    }
    fs::write(out.join("convergence.txt"), study.table()).map_err(io)?;
    Ok(study)
}

/// Integrates both streamline families and writes one polyline file per line into `out`.
pub fn trajectories(scenario: &Scenario, base: &Path, seed: Option<u64>, out: Option<&Path>) -> Result<TrajectoryRun, RunError> {
    let built = build_field(&scenario.field, scenario, base)?;
    let cfg = scenario.trajectories.unwrap_or_default();
    let run = run_trajectories(built.field, &scenario.potential(), &cfg, seed.unwrap_or(scenario.seed));
    if let Some(out) = out {
        fs::create_dir_all(out).map_err(io)?;
        for line in &run.lines {
            let path = out.join(format!("{}_{:03}.txt", line.family.name(), line.seed_index));
            fs::write(path, line.to_text()).map_err(io)?;
        }
        let summary = format!("max_divergence {:e}\nearly_terminations {}\n", run.max_divergence, run.early_terminations);
        fs::write(out.join("summary.txt"), summary).map_err(io)?;
    }
    Ok(run)
}

fn io(e: impl std::fmt::Display) -> RunError {
    RunError::Io(e.to_string())
}

/// 2 for configuration problems, 3 for runtime and i/o failures.
pub fn exit_code(e: &RunError) -> i32 {
    match e {
        RunError::Config { .. } | RunError::Unsupported(_) => 2,
        RunError::Runtime { .. } | RunError::Io(_) => 3,
    }
}
