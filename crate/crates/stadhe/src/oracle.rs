//! Matrix-representation oracle on seeded random pairs.

use ideal_rep::rep;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sta_core::{ComplexMultivector, Mv};

pub const ORACLE_TOL: f64 = 1e-12;

#[derive(Clone, Debug, Serialize)]
pub struct OracleOutcome {
    pub samples: usize,
    pub seed: u64,
    pub max_relative_error: f64,
    pub mean_relative_error: f64,
    pub tol: f64,
    pub pass: bool,
    /// Coefficients (re, im) of the worst pair, present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_pair: Option<[[[f64; 16]; 2]; 2]>,
}

fn random_mv(r: &mut ChaCha8Rng) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0)))
}

fn random_cmv(r: &mut ChaCha8Rng) -> ComplexMultivector<f64> {
    ComplexMultivector::new(random_mv(r), random_mv(r))
}

fn coeffs(a: &ComplexMultivector<f64>) -> [[f64; 16]; 2] {
    [*a.re.coeffs(), *a.im.coeffs()]
}

fn pairs(samples: usize, seed: u64) -> Vec<(ComplexMultivector<f64>, ComplexMultivector<f64>)> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| (random_cmv(&mut r), random_cmv(&mut r))).collect()
}

fn relative_error(a: &ComplexMultivector<f64>, b: &ComplexMultivector<f64>) -> f64 {
    let lhs = rep(&(*a * *b));
    (lhs - rep(a) * rep(b)).frobenius() / lhs.frobenius().max(1.0)
}

/// Per-pair ‖rep(ab) − rep(a)rep(b)‖_F / max(‖rep(ab)‖_F, 1).
pub fn oracle_errors(samples: usize, seed: u64) -> Vec<f64> {
    pairs(samples, seed).iter().map(|(a, b)| relative_error(a, b)).collect()
}

pub fn run_oracle(samples: usize, seed: u64) -> OracleOutcome {
    let pairs = pairs(samples, seed);
    let errors: Vec<f64> = pairs.iter().map(|(a, b)| relative_error(a, b)).collect();
    let (mut worst, mut at) = (0.0f64, 0);
    for (i, e) in errors.iter().enumerate() {
        if *e > worst {
            (worst, at) = (*e, i);
        }
    }
    let pass = samples > 0 && worst < ORACLE_TOL;
    OracleOutcome {
        samples,
        seed,
        max_relative_error: worst,
        mean_relative_error: if samples == 0 { 0.0 } else { errors.iter().sum::<f64>() / samples as f64 },
        tol: ORACLE_TOL,
        pass,
        worst_pair: if pass || samples == 0 { None } else { Some([coeffs(&pairs[at].0), coeffs(&pairs[at].1)]) },
    }
}

/// ‖unrep(rep(a)) − a‖ over seeded random elements.
pub fn roundtrip_errors(samples: usize, seed: u64) -> Vec<f64> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let a = random_cmv(&mut r);
            (ideal_rep::unrep(&rep(&a)) - a).norm()
        })
        .collect()
}
