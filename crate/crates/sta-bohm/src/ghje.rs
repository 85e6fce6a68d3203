//! Generalized Hamilton-Jacobi equation for ψ = ψ₀ e^{βγ_5/2} e^{Sγ_21}.

use std::str::FromStr;

use sta_core::{g21, gamma5, Mv};
use sta_fields::{
    require_even, Dual, Field, PotentialSpec, ScalarField, ScalarJet, SpacetimePoint,
};

use crate::polar::{half_beta, takabayashi};
use crate::BohmError;

/// Which form of the quantum potential Q to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QVariant {
    /// ⟨m sinβ γ_5V + (∂lnψ₀)X + ½γ_5 ∂(ln β) ψ⟩₁, undefined for β ≤ [`BETA_FLOOR`].
    Literal,
    /// As `Literal` with ∂β in place of ∂ln β.
    #[default]
    DBeta,
    /// ⟨−(∂lnψ₀)X + ½γ_5(∂β)X⟩₁, which closes the equation for every β.
    Rederived,
}

impl FromStr for QVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "literal" => Ok(Self::Literal),
            "dbeta" => Ok(Self::DBeta),
            "rederived" => Ok(Self::Rederived),
            other => Err(format!(
                "unknown q variant `{other}` (literal, dbeta, rederived)"
            )),
        }
    }
}

/// Which form of the trivector constraint to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConstraintVariant {
    /// ⟨e sinβ γ_5V + (∂lnψ₀)X + ½γ_5 ∂(ln β) ψ⟩₃.
    AsPrinted,
    /// As printed with m in place of e.
    Mass,
    /// ⟨m sinβ γ_5V − (∂lnψ₀)X + ½γ_5(∂β)X⟩₃.
    #[default]
    Rederived,
}

/// β at or below this is treated as outside the domain of ln β (round-off level).
pub const BETA_FLOOR: f64 = 1e-12;

/// Pointwise ingredients shared by Q, the GHJE and the constraint.
#[derive(Clone, Copy, Debug)]
pub struct GhjeTerms {
    pub psi: Mv,
    pub rho: f64,
    pub beta: f64,
    /// ∂β as the 1-form γ^μ∂_μβ.
    pub dbeta: Mv,
    /// γ^μ(∂_μψ₀)ψ₀⁻¹.
    pub dln_psi0: Mv,
    /// ψγ_21ψ⁻¹.
    pub x: Mv,
    /// e^{−βγ_5}ψγ_0ψ⁻¹, grade 1.
    pub v: Mv,
    /// −∂S.
    pub minus_ds: Mv,
    pub ea: Mv,
    pub e: f64,
    pub m: f64,
}

/// ρ, β and their gradients from the product rule on ψψ̃.
pub(crate) fn rho_beta_dual(psi: &Dual) -> (f64, f64, [f64; 4], [f64; 4]) {
    let q = *psi * psi.reverse();
    let (a, b) = (q.v.scalar_part(), q.v.pseudoscalar_part());
    let (rho, beta) = takabayashi(&psi.v);
    let r2 = a * a + b * b;
    let da = q.d.map(|x| x.scalar_part());
    let db = q.d.map(|x| x.pseudoscalar_part());
    let drho = std::array::from_fn(|mu| (a * da[mu] + b * db[mu]) / rho);
    let dbeta = std::array::from_fn(|mu| (a * db[mu] - b * da[mu]) / r2);
    (rho, beta, drho, dbeta)
}

pub fn ghje_terms_of(
    psi: &Dual,
    s: &ScalarJet,
    ea: &Mv,
    e: f64,
    m: f64,
) -> Result<GhjeTerms, BohmError> {
    require_even(&psi.v)?;
    let (rho, beta, _, db) = rho_beta_dual(psi);
    let psi_inv = psi.v.invert_spinor()?;
    let g21 = g21::<f64>();
    let g5 = gamma5::<f64>();
    let phase = (g21 * -s.v).exp_commuting_square()?;
    let e_dual = Dual::new(phase, std::array::from_fn(|mu| g21 * phase * -s.d[mu]));
    let f = half_beta(-beta);
    let f_dual = Dual::new(f, std::array::from_fn(|mu| g5 * f * (-0.5 * db[mu])));
    let psi0 = *psi * e_dual * f_dual;
    let psi0_inv = psi0.v.invert_spinor()?;
    let dln_psi0 = (0..4)
        .map(|mu| Mv::gamma_up(mu) * psi0.d[mu] * psi0_inv)
        .sum();
    let v = (half_beta(-2.0 * beta) * psi.v * Mv::gamma(0) * psi_inv).grade(1);
    Ok(GhjeTerms {
        psi: psi.v,
        rho,
        beta,
        dbeta: Mv::covector(db),
        dln_psi0,
        x: psi.v * g21 * psi_inv,
        v,
        minus_ds: -Mv::covector(s.d),
        ea: *ea,
        e,
        m,
    })
}

pub fn ghje_terms(
    psi: &dyn Field,
    s: &dyn ScalarField,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
) -> Result<GhjeTerms, BohmError> {
    let d = psi.dual(p)?;
    ghje_terms_of(&d, &s.jet(p), &pot.ea_dual(p).v, pot.e, pot.m)
}

impl GhjeTerms {
    fn dln_beta(&self) -> Result<Mv, BohmError> {
        if self.beta <= BETA_FLOOR {
            return Err(BohmError::BetaDomain { beta: self.beta });
        }
        Ok(self.dbeta * (1.0 / self.beta))
    }

    pub fn quantum_potential(&self, variant: QVariant) -> Result<Mv, BohmError> {
        let g5 = gamma5::<f64>();
        let q = match variant {
            QVariant::Literal => {
                g5 * self.v * (self.m * self.beta.sin())
                    + self.dln_psi0 * self.x
                    + g5 * self.dln_beta()? * self.psi * 0.5
            }
            QVariant::DBeta => {
                g5 * self.v * (self.m * self.beta.sin())
                    + self.dln_psi0 * self.x
                    + g5 * self.dbeta * self.psi * 0.5
            }
            QVariant::Rederived => -(self.dln_psi0 * self.x) + g5 * self.dbeta * self.x * 0.5,
        };
        Ok(q.grade(1))
    }

    /// −∂S − (m cosβ V + eA + Q).
    pub fn residual(&self, variant: QVariant) -> Result<Mv, BohmError> {
        let q = self.quantum_potential(variant)?;
        Ok(self.minus_ds - (self.v * (self.m * self.beta.cos()) + self.ea + q))
    }

    pub fn constraint(&self, variant: ConstraintVariant) -> Result<Mv, BohmError> {
        let g5 = gamma5::<f64>();
        let c = match variant {
            ConstraintVariant::AsPrinted | ConstraintVariant::Mass => {
                let k = if variant == ConstraintVariant::Mass {
                    self.m
                } else {
                    self.e
                };
                g5 * self.v * (k * self.beta.sin())
                    + self.dln_psi0 * self.x
                    + g5 * self.dln_beta()? * self.psi * 0.5
            }
            ConstraintVariant::Rederived => {
                g5 * self.v * (self.m * self.beta.sin()) - self.dln_psi0 * self.x
                    + g5 * self.dbeta * self.x * 0.5
            }
        };
        Ok(c.grade(3))
    }

    /// m' = m cos β.
    pub fn effective_mass(&self) -> f64 {
        self.m * self.beta.cos()
    }
}

pub fn quantum_potential(
    psi: &dyn Field,
    s: &dyn ScalarField,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    variant: QVariant,
) -> Result<Mv, BohmError> {
    ghje_terms(psi, s, pot, p)?.quantum_potential(variant)
}

pub fn ghje_residual(
    psi: &dyn Field,
    s: &dyn ScalarField,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    variant: QVariant,
) -> Result<Mv, BohmError> {
    ghje_terms(psi, s, pot, p)?.residual(variant)
}

pub fn constraint_residual(
    psi: &dyn Field,
    s: &dyn ScalarField,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    variant: ConstraintVariant,
) -> Result<Mv, BohmError> {
    ghje_terms(psi, s, pot, p)?.constraint(variant)
}

pub fn effective_mass(psi: &dyn Field, m: f64, p: &SpacetimePoint) -> Result<f64, BohmError> {
    let v = psi.value(p)?;
    require_even(&v)?;
    Ok(m * takabayashi(&v).1.cos())
}
