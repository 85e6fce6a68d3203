//! Report records and their JSON and text renderings.

use std::fmt::Write as _;

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use sta_fields::ResidualStats;

use crate::config::Variants;

pub const SCHEMA: &str = "sta-dhe-report/1";

/// How `max` (or `slope`) is judged against `tol`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// pass iff max ≤ tol.
    MaxBelow,
    /// pass iff max > tol; used where a breakdown must be exhibited.
    MaxAbove,
    /// pass iff |slope − target| ≤ tol.
    Slope,
    /// Measured quantity with no pass/fail; always reported as passing.
    Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct Check {
    pub id: String,
    /// The law or identity the residual measures, or "plumbing".
    pub law: String,
    pub points: usize,
    pub skipped: usize,
    pub max: f64,
    pub mean: f64,
    pub tol: f64,
    pub criterion: Criterion,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn from_stats(id: &str, law: &str, stats: ResidualStats, tol: f64, criterion: Criterion) -> Self {
        let pass = match criterion {
            Criterion::MaxBelow => stats.points > 0 && stats.max <= tol,
            Criterion::MaxAbove => stats.points > 0 && stats.max > tol,
            Criterion::Report => true,
            Criterion::Slope => false,
        };
        Self {
            id: id.into(),
            law: law.into(),
            points: stats.points,
            skipped: stats.skipped,
            max: stats.max,
            mean: stats.mean,
            tol,
            criterion,
            pass,
            slope: None,
            target: None,
            note: None,
        }
    }

    pub fn slope(id: &str, law: &str, points: usize, slope: f64, target: f64, tol: f64) -> Self {
        Self {
            id: id.into(),
            law: law.into(),
            points,
            skipped: 0,
            max: slope,
            mean: slope,
            tol,
            criterion: Criterion::Slope,
            pass: (slope - target).abs() <= tol,
            slope: Some(slope),
            target: Some(target),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A check that could not run on this scenario, with the reason.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct NotApplicable {
    pub id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct Conventions {
    pub metric_signature: String,
    pub pseudoscalar: String,
    pub trivector_k: String,
    pub phase_sign: String,
    pub beta_branch: String,
    pub gauge_transform: String,
    pub variants: Variants,
}

impl Conventions {
    pub fn new(variants: Variants) -> Self {
        Self {
            metric_signature: "(+,-,-,-)".into(),
            pseudoscalar: "γ5 = γ^0γ^1γ^2γ^3".into(),
            trivector_k: "K = γ21γ0".into(),
            phase_sign: "positive energy φ = exp(-m x⁰ γ21); matrix phase exp(θγ21) ↦ e^{+iθ}".into(),
            beta_branch: "φφ̃ = a + bγ5, β = atan2(b, a) in (-π, π]".into(),
            gauge_transform: "φ exp(-eχγ21) with A + ∂χ".into(),
            variants,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct Header {
    pub schema: String,
    pub version: String,
    pub scenario: String,
    pub seed: u64,
    pub tol_scale: f64,
    pub conventions: Conventions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct Report {
    pub header: Header,
    pub checks: Vec<Check>,
    pub not_applicable: Vec<NotApplicable>,
    pub summary: Summary,
}

impl Report {
    pub fn new(header: Header, mut checks: Vec<Check>, mut not_applicable: Vec<NotApplicable>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        not_applicable.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary { checks: checks.len(), passed, failed: checks.len() - passed };
        Self { header, checks, not_applicable, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let h = &self.header;
        let mut out = String::new();
        let _ = writeln!(out, "{} {} scenario={} seed={} tol_scale={}", h.schema, h.version, h.scenario, h.seed, h.tol_scale);
        let c = &h.conventions;
        let _ = writeln!(out, "metric {} | {} | {} | {}", c.metric_signature, c.pseudoscalar, c.trivector_k, c.phase_sign);
        let _ = writeln!(out, "beta {} | gauge {}", c.beta_branch, c.gauge_transform);
        let v = &c.variants;
        let _ = writeln!(
            out,
            "variants q={:?} n={:?} constraint={:?} pw={:?}",
            v.q_variant, v.n_variant, v.constraint_variant, v.pw_variant
        );
        for k in &self.checks {
            let verdict = if k.pass { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "{verdict} {:<44} max={:<11.3e} mean={:<11.3e} tol={:<9.1e} n={} skipped={}",
                k.id, k.max, k.mean, k.tol, k.points, k.skipped
            );
            if let (Some(s), Some(t)) = (k.slope, k.target) {
                let _ = write!(out, " slope={s:.4} target={t}");
            }
            if let Some(n) = &k.note {
                let _ = write!(out, " ({n})");
            }
            out.push('\n');
        }
        for n in &self.not_applicable {
            let _ = writeln!(out, "N/A  {:<44} {}", n.id, n.reason);
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} checks, {} passed, {} failed", s.checks, s.passed, s.failed);
        out
    }
}
