use std::sync::Arc;

use sta_core::Mv;

use crate::{Dual, ScalarField, SpacetimePoint};

/// A 1-form potential A(x) with its first partial derivatives.
pub trait VectorPotential: Send + Sync {
    fn dual(&self, p: &SpacetimePoint) -> Dual;
}

/// Blades of the six Faraday components, in the order γ_01, γ_02, γ_03, γ_12, γ_13, γ_23.
pub const FARADAY_BLADES: [usize; 6] = [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];

/// Gauge used to realise a constant Faraday field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FGauge {
    /// A = ½ x⌟F.
    #[default]
    Symmetric,
    /// A = x⁰(γ_0⌟F_E) + ½ x⌟F_B: the electric part depends on time only.
    Temporal,
}

#[derive(Clone)]
pub enum PotentialFamily {
    Zero,
    /// A = ∂χ.
    PureGauge(Arc<dyn ScalarField>),
    ConstantF { f: [f64; 6], gauge: FGauge },
    Custom(Arc<dyn VectorPotential>),
}

impl std::fmt::Debug for PotentialFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PotentialFamily::Zero => write!(f, "Zero"),
            PotentialFamily::PureGauge(_) => write!(f, "PureGauge"),
            PotentialFamily::ConstantF { f: c, gauge } => write!(f, "ConstantF({c:?}, {gauge:?})"),
            PotentialFamily::Custom(_) => write!(f, "Custom"),
        }
    }
}

/// Potential family with coupling e and mass m.
#[derive(Clone, Debug)]
pub struct PotentialSpec {
    pub family: PotentialFamily,
    pub e: f64,
    pub m: f64,
}

pub fn faraday_bivector(f: &[f64; 6]) -> Mv {
    (0..6).map(|i| Mv::blade(FARADAY_BLADES[i]) * f[i]).sum()
}

impl PotentialSpec {
    pub fn free(m: f64) -> Self {
        Self { family: PotentialFamily::Zero, e: 0.0, m }
    }

    pub fn new(family: PotentialFamily, e: f64, m: f64) -> Self {
        Self { family, e, m }
    }

    /// A and ∂_μA (without the coupling).
    pub fn a_dual(&self, p: &SpacetimePoint) -> Dual {
        match &self.family {
            PotentialFamily::Zero => Dual::default(),
            PotentialFamily::PureGauge(chi) => {
                let j = chi.jet(p);
                Dual::new(Mv::covector(j.d), std::array::from_fn(|nu| Mv::covector(j.dd[nu])))
            }
            PotentialFamily::ConstantF { f, gauge } => {
                let (e_part, b_part) = split_faraday(f);
                let x = p.position(&SpacetimePoint::origin());
                match gauge {
                    FGauge::Symmetric => {
                        let fb = e_part + b_part;
                        Dual::new(x.left_contract(&fb) * 0.5, std::array::from_fn(|mu| Mv::gamma(mu).left_contract(&fb) * 0.5))
                    }
                    FGauge::Temporal => {
                        let ae = Mv::gamma(0).left_contract(&e_part);
                        let mut d: [Mv; 4] = std::array::from_fn(|mu| Mv::gamma(mu).left_contract(&b_part) * 0.5);
                        d[0] += ae;
                        Dual::new(ae * p.x[0] + x.left_contract(&b_part) * 0.5, d)
                    }
                }
            }
            PotentialFamily::Custom(a) => a.dual(p),
        }
    }

    pub fn a(&self, p: &SpacetimePoint) -> Mv {
        self.a_dual(p).v
    }

    /// eA and its derivatives.
    pub fn ea_dual(&self, p: &SpacetimePoint) -> Dual {
        self.a_dual(p).scale(self.e)
    }

    /// F = ∂∧A.
    pub fn faraday(&self, p: &SpacetimePoint) -> Mv {
        let d = self.a_dual(p).d;
        (0..4).map(|mu| Mv::gamma_up(mu).wedge(&d[mu])).sum()
    }

    pub fn is_pure_gauge(&self) -> bool {
        matches!(self.family, PotentialFamily::PureGauge(_) | PotentialFamily::Zero)
    }
}

/// Electric (γ_0i) and magnetic (γ_ij) parts of the six-component field.
pub fn split_faraday(f: &[f64; 6]) -> (Mv, Mv) {
    let e = faraday_bivector(&[f[0], f[1], f[2], 0.0, 0.0, 0.0]);
    let b = faraday_bivector(&[0.0, 0.0, 0.0, f[3], f[4], f[5]]);
    (e, b)
}

/// A = a0 + x^μ slope_μ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearPotential {
    pub a0: Mv,
    pub slope: [Mv; 4],
}

impl VectorPotential for LinearPotential {
    fn dual(&self, p: &SpacetimePoint) -> Dual {
        let v = self.a0 + (0..4).map(|mu| self.slope[mu] * p.x[mu]).sum::<Mv>();
        Dual::new(v, self.slope)
    }
}

/// A = ε sin(k_μx^μ + phase), k given by covariant components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WavePotential {
    pub eps: Mv,
    pub k: [f64; 4],
    pub phase: f64,
}

impl VectorPotential for WavePotential {
    fn dual(&self, p: &SpacetimePoint) -> Dual {
        let (s, c) = (p.pair(&self.k) + self.phase).sin_cos();
        Dual::new(self.eps * s, self.k.map(|k| self.eps * (c * k)))
    }
}
