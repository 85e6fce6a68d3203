use sta_core::{gamma5, AlgebraError, Mv, DEFAULT_RHO_MIN};
use sta_fields::require_even;

use crate::BohmError;

/// φ = R e^{βγ_5/2} U with U Ũ = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarDecomposition {
    pub r: f64,
    /// Takabayashi angle in (−π, π].
    pub beta: f64,
    pub u: Mv,
}

impl PolarDecomposition {
    pub fn rho(&self) -> f64 {
        self.r * self.r
    }

    pub fn recompose(&self) -> Mv {
        half_beta(self.beta) * self.u * self.r
    }
}

/// e^{βγ_5/2}.
pub fn half_beta(beta: f64) -> Mv {
    let (s, c) = (beta / 2.0).sin_cos();
    Mv::scalar(c) + gamma5::<f64>() * s
}

/// a + bγ_5 = φφ̃ mapped to (ρ, β) with β ∈ (−π, π].
pub fn takabayashi(phi: &Mv) -> (f64, f64) {
    let q = *phi * phi.reverse();
    let (a, b) = (q.scalar_part(), q.pseudoscalar_part());
    let mut beta = b.atan2(a);
    if beta == -std::f64::consts::PI {
        beta = std::f64::consts::PI;
    }
    (a.hypot(b), beta)
}

pub fn polar_decompose(phi: &Mv) -> Result<PolarDecomposition, BohmError> {
    polar_decompose_with(phi, DEFAULT_RHO_MIN)
}

pub fn polar_decompose_with(phi: &Mv, rho_min: f64) -> Result<PolarDecomposition, BohmError> {
    require_even(phi)?;
    let (rho, beta) = takabayashi(phi);
    if rho < rho_min {
        return Err(AlgebraError::SingularSpinor { rho }.into());
    }
    let r = rho.sqrt();
    let u = half_beta(-beta) * *phi * (1.0 / r);
    Ok(PolarDecomposition { r, beta, u })
}
