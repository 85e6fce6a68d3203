//! Classical Dirac-Hestenes spinor fields φ = R 𝔑(Π) e^{Sγ_21} with Π = −∂S.

use std::str::FromStr;
use std::sync::Arc;

use sta_core::{g21, Mv};
use sta_fields::{Dual, Field, FieldError, Jet, PotentialSpec, ScalarField, SpacetimePoint};

use crate::BohmError;

/// Normalisation 𝔑(Π) of the classical spinor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NVariant {
    /// (m + (Π + eA)γ_0)/√(2(m + Π_0 + A_0)).
    Plus,
    /// (m + (Π − eA)γ_0)/√(2(m + Π_0 − eA_0)).
    Minus,
    /// Whichever of the two reproduces V = (Π − eA)/m at the probe point.
    #[default]
    Auto,
}

impl FromStr for NVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" => Ok(Self::Plus),
            "minus" => Ok(Self::Minus),
            "auto" => Ok(Self::Auto),
            other => Err(format!("unknown n variant `{other}` (auto, plus, minus)")),
        }
    }
}

/// Second derivatives are taken by fourth-order central differences of the exact gradient.
const HESSIAN_STEP: f64 = 1e-3;

#[derive(Clone)]
pub struct ClassicalSpinor {
    pub s: Arc<dyn ScalarField>,
    pub r: Arc<dyn ScalarField>,
    pub pot: PotentialSpec,
    /// Resolved variant, never `Auto`.
    pub variant: NVariant,
}

impl ClassicalSpinor {
    fn normalisation(&self, p: &SpacetimePoint) -> Result<Dual, BohmError> {
        let sj = self.s.jet(p);
        let pi = Dual::new(
            -Mv::covector(sj.d),
            std::array::from_fn(|nu| -Mv::covector(sj.dd[nu])),
        );
        let a = self.pot.a_dual(p);
        let e = self.pot.e;
        let (shifted, denom_a) = match self.variant {
            NVariant::Minus => (pi - a.scale(e), a.scale(-e)),
            _ => (pi + a.scale(e), a),
        };
        let g0 = Mv::gamma(0);
        let num = Dual::new(
            Mv::scalar(self.pot.m) + shifted.v * g0,
            shifted.d.map(|x| x * g0),
        );
        let comp = |x: &Mv| x.scalar_product(&g0);
        let q = self.pot.m + comp(&pi.v) + comp(&denom_a.v);
        if !(q > 0.0) {
            return Err(BohmError::DegenerateDenominator { value: 2.0 * q });
        }
        let dq: [f64; 4] = std::array::from_fn(|mu| comp(&pi.d[mu]) + comp(&denom_a.d[mu]));
        // f(q) = (2q)^{-1/2}, f'(q) = −(2q)^{-3/2}
        let f = (2.0 * q).powf(-0.5);
        let fp = -(2.0 * q).powf(-1.5);
        let inv = Dual::new(Mv::scalar(f), dq.map(|x| Mv::scalar(fp * x)));
        Ok(num * inv)
    }

    /// φ and ∂φ at `p`, with the denominator error kept.
    pub fn dual_checked(&self, p: &SpacetimePoint) -> Result<Dual, BohmError> {
        let n = self.normalisation(p)?;
        let rj = self.r.jet(p);
        let r = Dual::new(Mv::scalar(rj.v), rj.d.map(Mv::scalar));
        let sj = self.s.jet(p);
        let g = g21::<f64>();
        let phase = (g * sj.v).exp_commuting_square()?;
        let e = Dual::new(phase, std::array::from_fn(|mu| g * phase * sj.d[mu]));
        Ok(r * n * e)
    }
}

fn undefined(p: &SpacetimePoint, e: BohmError) -> FieldError {
    match e {
        BohmError::Field(f) => f,
        BohmError::Algebra(a) => a.into(),
        other => FieldError::Undefined {
            x: p.x,
            reason: other.to_string(),
        },
    }
}

impl Field for ClassicalSpinor {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.dual(p)?.v)
    }

    fn dual(&self, p: &SpacetimePoint) -> Result<Dual, FieldError> {
        self.dual_checked(p).map_err(|e| undefined(p, e))
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let c = self.dual(p)?;
        let h = HESSIAN_STEP;
        let mut dd = [[Mv::zero(); 4]; 4];
        for nu in 0..4 {
            let at = |k: f64| self.dual(&p.shifted(nu, k * h)).map(|d| d.d);
            let (p1, m1, p2, m2) = (at(1.0)?, at(-1.0)?, at(2.0)?, at(-2.0)?);
            for mu in 0..4 {
                dd[mu][nu] = ((p1[mu] - m1[mu]) * 8.0 - (p2[mu] - m2[mu])) * (1.0 / (12.0 * h));
            }
        }
        Ok(Jet { v: c.v, d: c.d, dd })
    }
}

/// Builds φ = R 𝔑(Π) e^{Sγ_21}. `Auto` is resolved at `probe`.
pub fn classical_dhsf(
    s: Arc<dyn ScalarField>,
    r: Arc<dyn ScalarField>,
    pot: PotentialSpec,
    variant: NVariant,
    probe: &SpacetimePoint,
) -> Result<ClassicalSpinor, BohmError> {
    let make = |variant| ClassicalSpinor {
        s: s.clone(),
        r: r.clone(),
        pot: pot.clone(),
        variant,
    };
    if variant != NVariant::Auto {
        let c = make(variant);
        c.dual_checked(probe)?;
        return Ok(c);
    }
    let target = {
        let a = pot.a(probe) * pot.e;
        (-Mv::covector(s.jet(probe).d) - a) * (1.0 / pot.m)
    };
    let mut best: Option<(f64, ClassicalSpinor)> = None;
    let mut first_err = None;
    for v in [NVariant::Plus, NVariant::Minus] {
        let c = make(v);
        match c.dual_checked(probe).and_then(|d| velocity(&d.v)) {
            Ok(vel) => {
                let miss = vel.distance(&target);
                if best.as_ref().map_or(true, |(b, _)| miss < *b - 1e-12) {
                    best = Some((miss, c));
                }
            }
            Err(e) => first_err = first_err.or(Some(e)),
        }
    }
    match (best, first_err) {
        (Some((_, c)), _) => Ok(c),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!(),
    }
}

/// V = φγ_0φ⁻¹ for a β = 0 spinor.
fn velocity(phi: &Mv) -> Result<Mv, BohmError> {
    Ok((*phi * Mv::gamma(0) * phi.invert_spinor()?).grade(1))
}
