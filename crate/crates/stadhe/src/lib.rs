//! Scenario-driven verification runner.
//!
//! A scenario (JSON) names a field, a potential, constants and a sampling region. The
//! [`verify`](run::verify) entry point runs the selected suites and returns a [`Report`]
//! whose check records carry residual statistics against named tolerances.

pub mod config;
pub mod evolution;
pub mod oracle;
pub mod report;
pub mod run;
pub mod suites;
pub mod trajectories;

use sta_fields::FieldError;
use thiserror::Error;

pub use config::{load_scenario, parse_scenario, Scenario};
pub use report::{Check, Criterion, Report};
pub use run::{exit_code, VerifyOptions};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("config error at `{key}`: {message}")]
    Config { key: String, message: String },
    #[error("runtime error in {check}: {message}")]
    Runtime { check: String, message: String },
    #[error("not supported here: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl RunError {
    pub fn runtime(check: &str, e: impl std::fmt::Display) -> Self {
        RunError::Runtime { check: check.into(), message: e.to_string() }
    }

    /// Lattice evolution errors: CFL and unrepresentable potentials are configuration problems.
    pub fn from_evolution(e: FieldError) -> Self {
        match e {
            FieldError::CflViolation { dt, dx } => {
                RunError::Config { key: "--step".into(), message: format!("CflViolation: dt = {dt} exceeds dx = {dx}") }
            }
            FieldError::UnsupportedPotential(m) => RunError::Unsupported(m),
            other => RunError::runtime("evolution", other),
        }
    }
}
