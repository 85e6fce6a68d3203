//! The split of ∂^μφ Kφ̃ into a 1-form momentum P^μ and a trivector W^μ.

use sta_core::{k_trivector, Mv};
use sta_fields::{
    dhe_residual_of, require_even, Dual, Field, Jet, PotentialFamily, PotentialSpec, SpacetimePoint,
};

use crate::ghje::rho_beta_dual;
use crate::polar::half_beta;
use crate::BohmError;

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Coefficients of the scalar, grade-4 and bivector equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PwVariant {
    /// 2⟨∂W 𝐉⟩₀, 2∂P∧𝐉 and P⌟W with coefficient 1.
    AsPrinted,
    /// ⟨∂W 𝐉⟩₀, ∂P∧𝐉 and 2P⌟W.
    #[default]
    Rederived,
}

#[derive(Clone, Copy, Debug)]
pub struct PwQuantities {
    /// P^μ = ⟨∂^μφ Kφ̃⟩₁/ρ.
    pub p: [Mv; 4],
    /// W^μ = −⟨∂^μφ Kφ̃⟩₃/ρ.
    pub w: [Mv; 4],
    /// φKφ̃/ρ, kept whole.
    pub jbold: Mv,
    /// Norm of the part of 𝐉 outside grade 1.
    pub jbold_grade_violation: f64,
    pub rho: f64,
    pub beta: f64,
}

/// P^μ, W^μ and 𝐉 carried with their first derivatives.
struct PwDuals {
    p: [Dual; 4],
    w: [Dual; 4],
    jbold: Dual,
    rho: f64,
    beta: f64,
}

fn pw_duals(jet: &Jet) -> Result<PwDuals, BohmError> {
    require_even(&jet.v)?;
    let phi = jet.dual();
    let (rho, beta, drho, _) = rho_beta_dual(&phi);
    if rho < sta_core::DEFAULT_RHO_MIN {
        return Err(sta_core::AlgebraError::SingularSpinor { rho }.into());
    }
    let inv_rho = Dual::new(
        Mv::scalar(1.0 / rho),
        drho.map(|x| Mv::scalar(-x / (rho * rho))),
    );
    let k = k_trivector::<f64>();
    let kr = k * phi.reverse();
    let m: [Dual; 4] = std::array::from_fn(|mu| jet.derivative_up(mu) * kr);
    Ok(PwDuals {
        p: std::array::from_fn(|mu| m[mu].grade(1) * inv_rho),
        w: std::array::from_fn(|mu| -(m[mu].grade(3) * inv_rho)),
        jbold: phi * kr * inv_rho,
        rho,
        beta,
    })
}

impl PwDuals {
    fn quantities(&self) -> PwQuantities {
        let jbold = self.jbold.v;
        PwQuantities {
            p: self.p.map(|d| d.v),
            w: self.w.map(|d| d.v),
            jbold,
            jbold_grade_violation: (jbold - jbold.grade(1)).norm(),
            rho: self.rho,
            beta: self.beta,
        }
    }
}

pub fn pw_quantities_of(jet: &Jet) -> Result<PwQuantities, BohmError> {
    Ok(pw_duals(jet)?.quantities())
}

pub fn pw_quantities(phi: &dyn Field, p: &SpacetimePoint) -> Result<PwQuantities, BohmError> {
    pw_quantities_of(&phi.jet(p)?)
}

/// −∂^μφ − (P^μ − W^μ)φ e^{−γ_5β} K, with the factor (`true`) or without it.
pub fn momentum_split_residual_of(jet: &Jet, with_beta_factor: bool) -> Result<[Mv; 4], BohmError> {
    let q = pw_quantities_of(jet)?;
    let k = k_trivector::<f64>();
    let tail = if with_beta_factor {
        jet.v * half_beta(-2.0 * q.beta) * k
    } else {
        jet.v * k
    };
    Ok(std::array::from_fn(|mu| {
        -(jet.derivative_up(mu).v) - (q.p[mu] - q.w[mu]) * tail
    }))
}

pub fn momentum_split_residual(
    phi: &dyn Field,
    p: &SpacetimePoint,
    with_beta_factor: bool,
) -> Result<[Mv; 4], BohmError> {
    momentum_split_residual_of(&phi.jet(p)?, with_beta_factor)
}

/// Gates for the free-field, β = 0 equations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PwGates {
    pub beta_tol: f64,
    pub solution_tol: f64,
}

impl Default for PwGates {
    fn default() -> Self {
        Self {
            beta_tol: 1e-8,
            solution_tol: 1e-6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PwEquations {
    /// P^μ·P_μ + W^μ⌟W_μ − c⟨∂_μW^μ 𝐉⟩₀ − m².
    pub scalar: f64,
    /// c ∂_μP^μ ∧ 𝐉.
    pub grade4: Mv,
    /// ∂_μP^μ⌟𝐉 + ⟨𝐉 ∂_μW^μ⟩₂ − c P_μ⌟W^μ.
    pub bivector: Mv,
}

impl PwEquations {
    pub fn max_abs(&self) -> f64 {
        self.scalar
            .abs()
            .max(self.grade4.max_abs())
            .max(self.bivector.max_abs())
    }
}

fn pw_equations_from(d: &PwDuals, m: f64, variant: PwVariant) -> PwEquations {
    let (c_scalar, c_grade4, c_pw) = match variant {
        PwVariant::AsPrinted => (2.0, 2.0, 1.0),
        PwVariant::Rederived => (1.0, 1.0, 2.0),
    };
    let (p, w) = (d.p.map(|x| x.v), d.w.map(|x| x.v));
    let jb = d.jbold.v;
    let div_p = Dual::divergence(&d.p);
    let div_w = Dual::divergence(&d.w);
    let mut pp = 0.0;
    let mut ww = 0.0;
    let mut pw = Mv::zero();
    for mu in 0..4 {
        pp += ETA[mu] * p[mu].scalar_product(&p[mu]);
        ww += ETA[mu] * w[mu].left_contract(&w[mu]).scalar_part();
        pw += p[mu].left_contract(&w[mu]) * ETA[mu];
    }
    PwEquations {
        scalar: pp + ww - c_scalar * (div_w * jb).scalar_part() - m * m,
        grade4: div_p.wedge(&jb) * c_grade4,
        bivector: div_p.left_contract(&jb) + (jb * div_w).grade(2) - pw * c_pw,
    }
}

fn require_free(pot: &PotentialSpec) -> Result<(), BohmError> {
    let free = pot.e == 0.0 || matches!(pot.family, PotentialFamily::Zero);
    if free {
        Ok(())
    } else {
        Err(BohmError::NotFree)
    }
}

/// The three equations of the P/W split on a free solution with β = 0.
pub fn pw_equation_residuals(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    variant: PwVariant,
    gates: &PwGates,
) -> Result<PwEquations, BohmError> {
    require_free(pot)?;
    let jet = phi.jet(p)?;
    let d = pw_duals(&jet)?;
    if d.beta.abs() > gates.beta_tol {
        return Err(BohmError::NonzeroBeta {
            beta: d.beta,
            tol: gates.beta_tol,
        });
    }
    let residual = dhe_residual_of(&jet.dual(), &Mv::zero(), pot.m).max_abs();
    if residual > gates.solution_tol {
        return Err(BohmError::NotASolution { residual });
    }
    Ok(pw_equations_from(&d, pot.m, variant))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PwIdentities {
    /// □φ φ̃ + φ□φ̃ against −2ρ(PP + WW) − ρ(∂P𝐉 − ∂W𝐉) + ρ(𝐉∂P + 𝐉∂W).
    pub sum: Mv,
    /// φ□φ̃ − □φ φ̃ against ρ(𝐉∂P + 𝐉∂W + ∂P𝐉 − ∂W𝐉) − 2ρ Σ(PW + WP).
    pub difference: Mv,
    /// The difference identity with the first bracket doubled.
    pub difference_doubled: Mv,
}

/// Off-shell identities behind the P/W equations, for any field with β = 0.
pub fn pw_identities_of(jet: &Jet, beta_tol: f64) -> Result<PwIdentities, BohmError> {
    let d = pw_duals(jet)?;
    if d.beta.abs() > beta_tol {
        return Err(BohmError::NonzeroBeta {
            beta: d.beta,
            tol: beta_tol,
        });
    }
    let rho = d.rho;
    let (p, w) = (d.p.map(|x| x.v), d.w.map(|x| x.v));
    let jb = d.jbold.v;
    let dp = Dual::divergence(&d.p);
    let dw = Dual::divergence(&d.w);
    let phi = jet.v;
    let bx = jet.box_op();
    let mut pp = Mv::zero();
    let mut ww = Mv::zero();
    let mut pws = Mv::zero();
    for mu in 0..4 {
        pp += p[mu] * p[mu] * ETA[mu];
        ww += w[mu] * w[mu] * ETA[mu];
        pws += (p[mu] * w[mu] + w[mu] * p[mu]) * ETA[mu];
    }
    let lhs_sum = bx * phi.reverse() + phi * bx.reverse();
    let lhs_diff = phi * bx.reverse() - bx * phi.reverse();
    let sum = (pp + ww) * (-2.0 * rho) - (dp * jb - dw * jb) * rho + (jb * dp + jb * dw) * rho;
    let bracket = (jb * dp + jb * dw + dp * jb - dw * jb) * rho;
    Ok(PwIdentities {
        sum: lhs_sum - sum,
        difference: lhs_diff - (bracket - pws * (2.0 * rho)),
        difference_doubled: lhs_diff - (bracket * 2.0 - pws * (2.0 * rho)),
    })
}

pub fn pw_identities(
    phi: &dyn Field,
    p: &SpacetimePoint,
    beta_tol: f64,
) -> Result<PwIdentities, BohmError> {
    pw_identities_of(&phi.jet(p)?, beta_tol)
}
