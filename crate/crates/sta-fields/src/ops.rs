//! Differential operators and the residuals of the first- and second-order equations.

use ideal_rep::{dirac_residual, ideal_from_dhs, IdealSpinor, RepError};
use sta_core::{g12, g21, Mv};

use crate::{Dual, Field, FieldError, Jet, PotentialSpec, SpacetimePoint};

/// Relative tolerance for the even-valuedness precondition.
pub const EVEN_TOL: f64 = 1e-12;

/// ∂ = d − δ at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracSplit {
    pub dirac: Mv,
    /// d C = γ^μ∧∂_μC.
    pub d_part: Mv,
    /// δ C = −γ^μ⌟∂_μC.
    pub delta_part: Mv,
}

pub fn dirac_of(d: &[Mv; 4]) -> Mv {
    Mv::dirac_sum(d)
}

pub fn dirac_operator(c: &dyn Field, p: &SpacetimePoint) -> Result<Mv, FieldError> {
    Ok(c.dual(p)?.dirac())
}

pub fn dirac_split(c: &dyn Field, p: &SpacetimePoint) -> Result<DiracSplit, FieldError> {
    let d = c.dual(p)?.d;
    let d_part: Mv = (0..4).map(|mu| Mv::gamma_up(mu).wedge(&d[mu])).sum();
    let delta_part: Mv = (0..4).map(|mu| -Mv::gamma_up(mu).left_contract(&d[mu])).sum();
    Ok(DiracSplit { dirac: dirac_of(&d), d_part, delta_part })
}

pub fn require_even(v: &Mv) -> Result<(), FieldError> {
    let odd_norm = v.odd_norm();
    if odd_norm > EVEN_TOL * (1.0 + v.norm()) {
        Err(FieldError::NotEven { odd_norm })
    } else {
        Ok(())
    }
}

/// ∂φγ_21 − eAφ − mφγ_0 from a first-order jet.
pub fn dhe_residual_of(phi: &Dual, ea: &Mv, m: f64) -> Mv {
    phi.dirac() * g21::<f64>() - *ea * phi.v - phi.v * Mv::gamma(0) * m
}

/// γ_12 (∂_μφ̃)γ^μ − eφ̃A − mγ_0φ̃.
pub fn adjoint_dhe_residual_of(phi: &Dual, ea: &Mv, m: f64) -> Mv {
    let r = phi.reverse();
    let right: Mv = (0..4).map(|mu| r.d[mu] * Mv::gamma_up(mu)).sum();
    g12::<f64>() * right - r.v * *ea - Mv::gamma(0) * r.v * m
}

pub fn dhe_residual(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint) -> Result<Mv, FieldError> {
    let d = phi.dual(p)?;
    require_even(&d.v)?;
    Ok(dhe_residual_of(&d, &pot.ea_dual(p).v, pot.m))
}

pub fn adjoint_dhe_residual(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint) -> Result<Mv, FieldError> {
    let d = phi.dual(p)?;
    require_even(&d.v)?;
    Ok(adjoint_dhe_residual_of(&d, &pot.ea_dual(p).v, pot.m))
}

/// ∂²φ − (e²A² − m²)φ + e[(∂A)φ + 2(A·∂)φ]γ_21 from a second-order jet.
pub fn squared_residual_of(phi: &Jet, ea: &Dual, m: f64) -> Mv {
    let a = ea.v;
    let da = ea.dirac();
    let a_up = a.vector_components();
    let directional: Mv = (0..4).map(|mu| phi.d[mu] * a_up[mu]).sum();
    let rhs = phi.v * ((a * a).scalar_part() - m * m) - (da * phi.v + directional * 2.0) * g21::<f64>();
    phi.box_op() - rhs
}

pub fn squared_equation_residual(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint) -> Result<Mv, FieldError> {
    Ok(squared_residual_of(&phi.jet(p)?, &pot.ea_dual(p), pot.m))
}

/// ∂(vC) − [(∂v)C − v(∂C) + 2(v·∂)C]; v is read through its grade-1 part.
pub fn identity_vc(v: &dyn Field, c: &dyn Field, p: &SpacetimePoint) -> Result<Mv, FieldError> {
    let vd = v.dual(p)?.grade(1);
    let cd = c.dual(p)?;
    let lhs = (vd * cd).dirac();
    let up = vd.v.vector_components();
    let directional: Mv = (0..4).map(|mu| cd.d[mu] * up[mu]).sum();
    Ok(lhs - (vd.dirac() * cd.v - vd.v * cd.dirac() + directional * 2.0))
}

pub fn faraday(pot: &PotentialSpec, p: &SpacetimePoint) -> Mv {
    pot.faraday(p)
}

/// iγ̲^μ∂_μΨ − eγ̲^μA_μΨ − mΨ for the column spinor Ψ of φ.
pub fn ideal_dirac_residual(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint) -> Result<IdealSpinor<f64>, FieldError> {
    let d = phi.dual(p)?;
    let to_col = |x: &Mv| {
        ideal_from_dhs(x).map_err(|e| match e {
            RepError::NotEven { odd_norm } => FieldError::NotEven { odd_norm },
            RepError::NotInIdeal { .. } => FieldError::NotEven { odd_norm: f64::NAN },
        })
    };
    let psi = to_col(&d.v)?;
    let dpsi = [to_col(&d.d[0])?, to_col(&d.d[1])?, to_col(&d.d[2])?, to_col(&d.d[3])?];
    Ok(dirac_residual(&psi, &dpsi, pot.m, pot.ea_dual(p).v.covector_components()))
}
