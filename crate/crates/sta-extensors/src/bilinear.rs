use sta_core::{gamma5, Mv, DEFAULT_RHO_MIN};
use sta_fields::{require_even, Dual, Field, SpacetimePoint};

use crate::ExtensorError;

/// Bilinear covariants of an even spinor φ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BilinearSet {
    /// J = φγ^0φ̃.
    pub j: Mv,
    /// s = φγ^3φ̃.
    pub s: Mv,
    pub rho: f64,
    pub beta: f64,
    /// V = J/ρ, equal to the vector factor of φγ^0φ⁻¹ = e^{βγ_5}V.
    pub v: Mv,
}

pub fn current(phi: &Mv) -> Mv {
    *phi * Mv::gamma_up(0) * phi.reverse()
}

pub fn spin(phi: &Mv) -> Mv {
    *phi * Mv::gamma_up(3) * phi.reverse()
}

/// (ρ, β) with φφ̃ = ρ(cos β + γ_5 sin β).
pub fn rho_beta(phi: &Mv) -> (f64, f64) {
    let q = *phi * phi.reverse();
    let (a, b) = (q.scalar_part(), q.pseudoscalar_part());
    (a.hypot(b), b.atan2(a))
}

pub fn bilinears(phi: &Mv) -> Result<BilinearSet, ExtensorError> {
    bilinears_with(phi, DEFAULT_RHO_MIN)
}

pub fn bilinears_with(phi: &Mv, rho_min: f64) -> Result<BilinearSet, ExtensorError> {
    require_even(phi)?;
    let (rho, beta) = rho_beta(phi);
    if rho < rho_min {
        return Err(sta_core::AlgebraError::SingularSpinor { rho }.into());
    }
    let inv = phi.invert_spinor_with(rho_min)?;
    let strip = (gamma5::<f64>() * -beta).exp_commuting_square()?;
    let v = (strip * *phi * Mv::gamma_up(0) * inv).grade(1);
    Ok(BilinearSet { j: current(phi), s: spin(phi), rho, beta, v })
}

pub fn current_dual(phi: &Dual) -> Dual {
    *phi * Dual::constant(Mv::gamma_up(0)) * phi.reverse()
}

pub fn spin_dual(phi: &Dual) -> Dual {
    *phi * Dual::constant(Mv::gamma_up(3)) * phi.reverse()
}

/// ∂_μJ^μ.
pub fn current_divergence(phi: &dyn Field, p: &SpacetimePoint) -> Result<f64, ExtensorError> {
    let j = current_dual(&phi.dual(p)?);
    Ok((0..4).map(|mu| j.d[mu].vector_components()[mu]).sum())
}
