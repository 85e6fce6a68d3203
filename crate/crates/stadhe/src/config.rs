//! Declarative scenario files (JSON). Unknown keys are rejected everywhere.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use sta_bohm::{classical_dhsf, ConstraintVariant, NVariant, PwVariant, QVariant};
use sta_core::Mv;
use sta_fields::{
    FGauge, GaugeDressed, Gaussian, LatticeField, PlaneWave, PotentialFamily, PotentialSpec, Quadratic,
    SampleBox, ScalarField, SharedField, Sinusoid, Snapshot, SpacetimePoint, Superposition, Volkov, WavePotential,
};

use crate::RunError;

#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub constants: Constants,
    pub field: FieldConfig,
    pub potential: PotentialConfig,
    pub sampling: Sampling,
    /// Suites run when `--suite` is not given.
    #[serde(default = "default_suites")]
    pub suites: Vec<String>,
    /// Per-check tolerance overrides, keyed by check id.
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub variants: Variants,
    /// Origin x₀ of the position 1-form.
    #[serde(default)]
    pub origin: [f64; 4],
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub evolution: Option<EvolutionConfig>,
    #[serde(default)]
    pub trajectories: Option<TrajectoryConfig>,
}

fn default_suites() -> Vec<String> {
    vec!["all".into()]
}

/// Coupling and mass; both required.
#[derive(Clone, Copy, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct Constants {
    pub e: f64,
    pub m: f64,
}

#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct WaveConfig {
    /// Rapidity ζ_k of the boost exp(½ζ_kγ_kγ_0).
    #[serde(default)]
    pub boost: [f64; 3],
    #[serde(default)]
    pub rotation: [f64; 3],
    /// −1 for positive energy exp(−p·x γ_21).
    #[serde(default = "minus_one")]
    pub phase_sign: f64,
    #[serde(default = "one")]
    pub amplitude: f64,
    #[serde(default)]
    pub phase: f64,
}

fn minus_one() -> f64 {
    -1.0
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldConfig {
    PlaneWave {
        #[serde(flatten)]
        wave: WaveConfig,
    },
    Superposition {
        waves: Vec<WaveConfig>,
    },
    /// inner · exp(−eχγ_21) with e from `constants`.
    GaugeDressed {
        inner: Box<FieldConfig>,
        chi: ScalarConfig,
    },
    /// R 𝔑(Π) e^{Sγ_21} with Π = −∂S.
    Classical {
        s: ScalarConfig,
        r: ScalarConfig,
    },
    Volkov {
        #[serde(default)]
        boost: [f64; 3],
        #[serde(default)]
        rotation: [f64; 3],
        /// Null wave vector (contravariant).
        k: [f64; 4],
        /// Polarisation with k·ε = 0 (contravariant).
        eps: [f64; 4],
    },
    LatticeSnapshot {
        /// Snapshot files in time order, relative to the scenario file.
        paths: Vec<PathBuf>,
        #[serde(default)]
        z0: f64,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum ScalarConfig {
    /// c + k_μx^μ + ½h_{μν}x^μx^ν.
    Quadratic {
        #[serde(default)]
        c: f64,
        #[serde(default)]
        k: [f64; 4],
        #[serde(default)]
        h: [[f64; 4]; 4],
    },
    Gaussian { offset: f64, amplitude: f64, center: [f64; 4], sigma: f64 },
    /// amplitude · sin(k_μx^μ + phase).
    Sinusoid { amplitude: f64, k: [f64; 4], phase: f64 },
    /// S = −p·x for the momentum p of a boosted rest wave of mass `constants.m`.
    MassShell {
        #[serde(default)]
        boost: [f64; 3],
    },
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum GaugeConfig {
    Symmetric,
    Temporal,
}

#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialConfig {
    Zero,
    /// A = ∂χ.
    PureGauge { chi: ScalarConfig },
    /// Components (F_01, F_02, F_03, F_12, F_13, F_23) on γ_0γ_1, …, γ_2γ_3.
    ConstantF { f: [f64; 6], gauge: GaugeConfig },
    /// A = ε sin(k·x).
    PlaneWave { k: [f64; 4], eps: [f64; 4] },
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct Sampling {
    /// Half width of the sampling cube around the origin.
    pub half_width: f64,
    /// Halton points, used unless a grid is requested.
    pub points: usize,
    /// Points per axis of a regular grid; overrides `points`.
    #[serde(default)]
    pub grid: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Variants {
    #[serde(default)]
    pub q_variant: QChoice,
    #[serde(default)]
    pub n_variant: NChoice,
    #[serde(default)]
    pub constraint_variant: ConstraintChoice,
    #[serde(default)]
    pub pw_variant: PwChoice,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum QChoice {
    Literal,
    Dbeta,
    #[default]
    Rederived,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum NChoice {
    #[default]
    Auto,
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintChoice {
    AsPrinted,
    Mass,
    #[default]
    Rederived,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, JsonSchema, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum PwChoice {
    AsPrinted,
    #[default]
    Rederived,
}

impl Variants {
    pub fn q(&self) -> QVariant {
        match self.q_variant {
            QChoice::Literal => QVariant::Literal,
            QChoice::Dbeta => QVariant::DBeta,
            QChoice::Rederived => QVariant::Rederived,
        }
    }

    pub fn n(&self) -> NVariant {
        match self.n_variant {
            NChoice::Auto => NVariant::Auto,
            NChoice::Plus => NVariant::Plus,
            NChoice::Minus => NVariant::Minus,
        }
    }

    pub fn constraint(&self) -> ConstraintVariant {
        match self.constraint_variant {
            ConstraintChoice::AsPrinted => ConstraintVariant::AsPrinted,
            ConstraintChoice::Mass => ConstraintVariant::Mass,
            ConstraintChoice::Rederived => ConstraintVariant::Rederived,
        }
    }

    pub fn pw(&self) -> PwVariant {
        match self.pw_variant {
            PwChoice::AsPrinted => PwVariant::AsPrinted,
            PwChoice::Rederived => PwVariant::Rederived,
        }
    }
}

/// Lattice convergence study parameters.
#[derive(Clone, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct EvolutionConfig {
    pub cells: Vec<usize>,
    /// Steps on the coarsest grid; finer grids scale with the cell count.
    pub steps: usize,
    /// Period of the z direction.
    pub length: f64,
    /// dt/dz.
    pub courant: f64,
    /// Initial data sampled at t = 0; defaults to a rest wave plus one periodic boosted mode.
    #[serde(default)]
    pub initial: Option<FieldConfig>,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        Self { cells: vec![64, 128, 256], steps: 100, length: 1.0, courant: 0.5, initial: None }
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct TrajectoryConfig {
    pub seeds: usize,
    pub t_final: f64,
    pub dt: f64,
    /// Start points are drawn from the spatial cube of this half width at t = 0.
    pub half_width: f64,
}

impl Default for TrajectoryConfig {
    fn default() -> Self {
        Self { seeds: 10, t_final: 2.0, dt: 0.01, half_width: 1.0 }
    }
}

/// Parses scenario JSON, naming the offending key on failure.
pub fn parse_scenario(text: &str) -> Result<Scenario, RunError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        RunError::Config { key: path, message: e.inner().to_string() }
    })?;
    scenario.validate()?;
    Ok(scenario)
}

pub fn load_scenario(path: &Path) -> Result<(Scenario, PathBuf), RunError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunError::Config { key: "--scenario".into(), message: format!("{}: {e}", path.display()) })?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok((parse_scenario(&text)?, base))
}

fn config_err(key: &str, message: impl Into<String>) -> RunError {
    RunError::Config { key: key.into(), message: message.into() }
}

impl Scenario {
    fn validate(&self) -> Result<(), RunError> {
        if !(self.constants.m > 0.0) {
            return Err(config_err("constants.m", "mass must be positive"));
        }
        if !(self.sampling.half_width > 0.0) {
            return Err(config_err("sampling.half_width", "must be positive"));
        }
        if self.sampling.points == 0 && self.sampling.grid.is_none() {
            return Err(config_err("sampling.points", "must be at least 1"));
        }
        if self.sampling.grid == Some(0) {
            return Err(config_err("sampling.grid", "must be at least 1"));
        }
        for s in &self.suites {
            crate::suites::Suite::parse(s).map_err(|m| config_err("suites", m))?;
        }
        if let Some(ev) = &self.evolution {
            if ev.cells.is_empty() || ev.cells.iter().any(|&n| n < 8) {
                return Err(config_err("evolution.cells", "need at least one grid of 8 or more cells"));
            }
            if !(ev.length > 0.0) || !(ev.courant > 0.0) {
                return Err(config_err("evolution", "length and courant must be positive"));
            }
        }
        if let Some(t) = &self.trajectories {
            if !(t.dt > 0.0) || !(t.t_final > 0.0) {
                return Err(config_err("trajectories", "dt and t_final must be positive"));
            }
        }
        Ok(())
    }

    pub fn origin(&self) -> SpacetimePoint {
        SpacetimePoint::new(self.origin)
    }

    pub fn potential(&self) -> PotentialSpec {
        build_potential(&self.potential, &self.constants)
    }

    pub fn points(&self, grid: Option<usize>) -> Vec<SpacetimePoint> {
        let b = SampleBox::cube(self.sampling.half_width);
        match grid.or(self.sampling.grid) {
            Some(n) => b.grid(n),
            None => b.halton(self.sampling.points),
        }
    }
}

pub fn build_scalar(cfg: &ScalarConfig, c: &Constants) -> Arc<dyn ScalarField> {
    match cfg {
        ScalarConfig::Quadratic { c: c0, k, h } => Arc::new(Quadratic::new(*c0, *k, *h)),
        ScalarConfig::Gaussian { offset, amplitude, center, sigma } => {
            Arc::new(Gaussian { offset: *offset, amplitude: *amplitude, center: *center, sigma: *sigma })
        }
        ScalarConfig::Sinusoid { amplitude, k, phase } => Arc::new(Sinusoid { amplitude: *amplitude, k: *k, phase: *phase }),
        ScalarConfig::MassShell { boost } => {
            let p = PlaneWave::boosted(c.m, *boost, [0.0; 3]).momentum;
            Arc::new(Quadratic::linear(p.covector_components().map(|x| -x)))
        }
    }
}

pub fn build_potential(cfg: &PotentialConfig, c: &Constants) -> PotentialSpec {
    let family = match cfg {
        PotentialConfig::Zero => PotentialFamily::Zero,
        PotentialConfig::PureGauge { chi } => PotentialFamily::PureGauge(build_scalar(chi, c)),
        PotentialConfig::ConstantF { f, gauge } => PotentialFamily::ConstantF {
            f: *f,
            gauge: match gauge {
                GaugeConfig::Symmetric => FGauge::Symmetric,
                GaugeConfig::Temporal => FGauge::Temporal,
            },
        },
        PotentialConfig::PlaneWave { k, eps } => PotentialFamily::Custom(Arc::new(WavePotential {
            eps: Mv::vector(*eps),
            k: Mv::vector(*k).covector_components(),
            phase: 0.0,
        })),
    };
    PotentialSpec::new(family, c.e, c.m)
}

fn wave(w: &WaveConfig, m: f64) -> PlaneWave {
    PlaneWave::boosted(m, w.boost, w.rotation).with_sign(w.phase_sign).with_amplitude(w.amplitude).with_phase(w.phase)
}

/// A built field plus the phase S it carries when one is defined.
pub struct BuiltField {
    pub field: SharedField,
    pub phase: Option<Arc<dyn ScalarField>>,
    pub lattice: Option<Arc<LatticeField>>,
}

pub fn build_field(cfg: &FieldConfig, scenario: &Scenario, base: &Path) -> Result<BuiltField, RunError> {
    let c = &scenario.constants;
    let plain = |field: SharedField| BuiltField { field, phase: None, lattice: None };
    Ok(match cfg {
        FieldConfig::PlaneWave { wave: w } => {
            let pw = wave(w, c.m);
            let k = pw.momentum.covector_components().map(|x| x * w.phase_sign);
            let s: Arc<dyn ScalarField> = Arc::new(Quadratic::new(w.phase, k, [[0.0; 4]; 4]));
            BuiltField { field: Arc::new(pw), phase: Some(s), lattice: None }
        }
        FieldConfig::Superposition { waves } => {
            if waves.is_empty() {
                return Err(config_err("field.waves", "need at least one wave"));
            }
            plain(Arc::new(Superposition::new(waves.iter().map(|w| Arc::new(wave(w, c.m)) as SharedField).collect())))
        }
        FieldConfig::GaugeDressed { inner, chi } => {
            let inner = build_field(inner, scenario, base)?;
            plain(Arc::new(GaugeDressed { inner: inner.field, chi: build_scalar(chi, c), e: c.e }))
        }
        FieldConfig::Classical { s, r } => {
            let s = build_scalar(s, c);
            let field = classical_dhsf(s.clone(), build_scalar(r, c), scenario.potential(), scenario.variants.n(), &scenario.origin())
                .map_err(|e| config_err("field", e.to_string()))?;
            BuiltField { field: Arc::new(field), phase: Some(s), lattice: None }
        }
        FieldConfig::Volkov { boost, rotation, k, eps } => {
            plain(Arc::new(Volkov::new(c.m, *boost, *rotation, Mv::vector(*k), Mv::vector(*eps), c.e)))
        }
        FieldConfig::LatticeSnapshot { paths, z0 } => {
            let snaps = paths
                .iter()
                .map(|p| {
                    let full = base.join(p);
                    let f = std::fs::File::open(&full).map_err(|e| config_err("field.paths", format!("{}: {e}", full.display())))?;
                    Snapshot::read_from(&mut std::io::BufReader::new(f)).map_err(|e| config_err("field.paths", e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let lat = LatticeField::from_snapshots(&snaps, *z0).map_err(|e| config_err("field.paths", e.to_string()))?;
            let lat = Arc::new(lat);
            BuiltField { field: lat.clone(), phase: None, lattice: Some(lat) }
        }
    })
}
