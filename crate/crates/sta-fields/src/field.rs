use std::sync::Arc;

use sta_core::{g21, Mv};

use crate::fd::{FdOrder, FiniteDifference};
use crate::{Dual, FieldError, Jet, ScalarField, SpacetimePoint};

/// A multivector field with a derivative engine.
///
/// `jet` returns the value with all first and second partial derivatives ∂_μ, ∂_μ∂_ν.
pub trait Field: Send + Sync {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError>;

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError>;

    fn dual(&self, p: &SpacetimePoint) -> Result<Dual, FieldError> {
        self.jet(p).map(|j| j.dual())
    }

    fn derivative(&self, mu: usize, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.dual(p)?.d[mu])
    }
}

pub type SharedField = Arc<dyn Field>;

impl<F: Field + ?Sized> Field for Arc<F> {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        (**self).value(p)
    }
    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        (**self).jet(p)
    }
    fn dual(&self, p: &SpacetimePoint) -> Result<Dual, FieldError> {
        (**self).dual(p)
    }
}

impl<F: Field + ?Sized> Field for &F {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        (**self).value(p)
    }
    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        (**self).jet(p)
    }
    fn dual(&self, p: &SpacetimePoint) -> Result<Dual, FieldError> {
        (**self).dual(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantField(pub Mv);

impl Field for ConstantField {
    fn value(&self, _: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.0)
    }
    fn jet(&self, _: &SpacetimePoint) -> Result<Jet, FieldError> {
        Ok(Jet::constant(self.0))
    }
}

/// c0 + c1_μ x^μ + ½ c2_{μν} x^μ x^ν with multivector coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct PolynomialField {
    pub c0: Mv,
    pub c1: [Mv; 4],
    pub c2: [[Mv; 4]; 4],
}

impl PolynomialField {
    /// Symmetrises `c2`.
    pub fn new(c0: Mv, c1: [Mv; 4], c2: [[Mv; 4]; 4]) -> Self {
        let c2 = std::array::from_fn(|i| std::array::from_fn(|j| (c2[i][j] + c2[j][i]) * 0.5));
        Self { c0, c1, c2 }
    }

    /// x^mu · coeff.
    pub fn coordinate(mu: usize, coeff: Mv) -> Self {
        let mut c1 = [Mv::zero(); 4];
        c1[mu] = coeff;
        Self { c1, ..Self::default() }
    }
}

impl Field for PolynomialField {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.jet(p)?.v)
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let x = p.x;
        let c2x: [Mv; 4] = std::array::from_fn(|i| (0..4).map(|j| self.c2[i][j] * x[j]).sum());
        let v = self.c0 + (0..4).map(|i| self.c1[i] * x[i] + c2x[i] * (0.5 * x[i])).sum::<Mv>();
        Ok(Jet { v, d: std::array::from_fn(|i| self.c1[i] + c2x[i]), dd: self.c2 })
    }
}

/// A field given only by its values; derivatives come from 4th-order central differences.
pub struct FnField<F> {
    f: F,
    step: f64,
}

impl<F: Fn(&SpacetimePoint) -> Mv + Send + Sync> FnField<F> {
    pub fn new(f: F) -> Self {
        Self { f, step: 1e-3 }
    }

    pub fn with_step(f: F, step: f64) -> Self {
        Self { f, step }
    }
}

impl<F: Fn(&SpacetimePoint) -> Mv + Send + Sync> Field for FnField<F> {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok((self.f)(p))
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        FiniteDifference::new(ValueOnly(&self.f), self.step, FdOrder::Fourth).jet(p)
    }
}

struct ValueOnly<'a, F>(&'a F);

impl<F: Fn(&SpacetimePoint) -> Mv + Send + Sync> Field for ValueOnly<'_, F> {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok((self.0)(p))
    }
    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        Ok(Jet::constant((self.0)(p)))
    }
}

/// Dirac-Hestenes plane wave C·exp(s(p·x)γ_21 + αγ_21).
///
/// With s = −1 and C = B q (B a boost rotor, q a spatial rotor) it solves the free equation
/// for p = m Bγ_0B̃. The opposite sign is a negative-energy solution of a different equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWave {
    pub spinor: Mv,
    pub momentum: Mv,
    pub sign: f64,
    pub phase: f64,
}

impl PlaneWave {
    /// exp(−m x⁰ γ_21).
    pub fn rest(m: f64) -> Self {
        Self { spinor: Mv::one(), momentum: Mv::gamma(0) * m, sign: -1.0, phase: 0.0 }
    }

    /// Rest wave boosted by rapidity ζ (B = exp(½ζ_kγ_kγ_0)) and rotated by q = exp(½θ·(γ_23, γ_31, γ_12)).
    pub fn boosted(m: f64, rapidity: [f64; 3], rotation: [f64; 3]) -> Self {
        let b = boost_rotor(rapidity);
        let q = rotation_rotor(rotation);
        let momentum = (b * Mv::gamma(0) * b.reverse()).grade(1) * m;
        Self { spinor: b * q, momentum, sign: -1.0, phase: 0.0 }
    }

    pub fn with_amplitude(mut self, a: f64) -> Self {
        self.spinor = self.spinor * a;
        self
    }

    pub fn with_phase(mut self, phase: f64) -> Self {
        self.phase = phase;
        self
    }

    pub fn with_sign(mut self, sign: f64) -> Self {
        self.sign = sign;
        self
    }

    fn angle(&self, p: &SpacetimePoint) -> f64 {
        self.sign * p.pair(&self.momentum.covector_components()) + self.phase
    }
}

impl Field for PlaneWave {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        let (s, c) = self.angle(p).sin_cos();
        Ok(self.spinor * (Mv::scalar(c) + g21::<f64>() * s))
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let v = self.value(p)?;
        let k = self.momentum.covector_components().map(|x| x * self.sign);
        let vg = v * g21::<f64>();
        Ok(Jet {
            v,
            d: k.map(|kmu| vg * kmu),
            dd: std::array::from_fn(|i| std::array::from_fn(|j| v * (-k[i] * k[j]))),
        })
    }
}

pub fn boost_rotor(rapidity: [f64; 3]) -> Mv {
    let gen: Mv = (0..3).map(|k| Mv::gamma(k + 1) * Mv::gamma(0) * (0.5 * rapidity[k])).sum();
    gen.exp_commuting_square().expect("boost generator has scalar square")
}

pub fn rotation_rotor(angles: [f64; 3]) -> Mv {
    let planes = [Mv::blade(0b1100), -Mv::blade(0b1010), Mv::blade(0b0110)];
    let gen: Mv = (0..3).map(|k| planes[k] * (0.5 * angles[k])).sum();
    gen.exp_commuting_square().expect("rotation generator has scalar square")
}

#[derive(Clone)]
pub struct Superposition {
    pub parts: Vec<SharedField>,
}

impl Superposition {
    pub fn new(parts: Vec<SharedField>) -> Self {
        Self { parts }
    }
}

impl Field for Superposition {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        self.parts.iter().try_fold(Mv::zero(), |acc, f| Ok(acc + f.value(p)?))
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        self.parts.iter().try_fold(Jet::default(), |acc, f| Ok(acc + f.jet(p)?))
    }
}

/// φ·exp(−eχγ_21); solves the equation with A + ∂χ whenever φ solves it with A.
#[derive(Clone)]
pub struct GaugeDressed {
    pub inner: SharedField,
    pub chi: Arc<dyn ScalarField>,
    pub e: f64,
}

impl GaugeDressed {
    fn phase_jet(&self, p: &SpacetimePoint) -> Jet {
        let chi = self.chi.jet(p);
        let e = self.e;
        let i = g21::<f64>();
        let (s, c) = (-e * chi.v).sin_cos();
        let u = Mv::scalar(c) + i * s;
        Jet {
            v: u,
            d: std::array::from_fn(|mu| i * u * (-e * chi.d[mu])),
            dd: std::array::from_fn(|a| {
                std::array::from_fn(|b| (i * (-e * chi.dd[a][b]) - Mv::scalar(e * e * chi.d[a] * chi.d[b])) * u)
            }),
        }
    }
}

impl Field for GaugeDressed {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.inner.value(p)? * self.phase_jet(p).v)
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        Ok(self.inner.jet(p)?.product(&self.phase_jet(p)))
    }
}

/// R(x)·φ(x) for a real envelope R.
#[derive(Clone)]
pub struct Modulated {
    pub envelope: Arc<dyn ScalarField>,
    pub inner: SharedField,
}

impl Field for Modulated {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.inner.value(p)? * self.envelope.value(p))
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        Ok(self.envelope.jet(p).to_jet().product(&self.inner.jet(p)?))
    }
}

/// Pointwise geometric product a(x)b(x).
#[derive(Clone)]
pub struct ProductField {
    pub left: SharedField,
    pub right: SharedField,
}

impl Field for ProductField {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.left.value(p)? * self.right.value(p)?)
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        Ok(self.left.jet(p)?.product(&self.right.jet(p)?))
    }
}

/// Volkov solution in the plane-wave potential A = ε sin(k·x), k null, k·ε = 0:
/// φ = (1 + e kA/(2k·p)) C exp(−Sγ_21) with
/// S = p·x + e(ε·p)/(k·p)(1 − cos ξ) − e²ε²/(2k·p)(ξ/2 − sin 2ξ/4), ξ = k·x.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Volkov {
    pub spinor: Mv,
    pub momentum: Mv,
    pub k: Mv,
    pub eps: Mv,
    pub e: f64,
}

impl Volkov {
    pub fn new(m: f64, rapidity: [f64; 3], rotation: [f64; 3], k: Mv, eps: Mv, e: f64) -> Self {
        let w = PlaneWave::boosted(m, rapidity, rotation);
        Self { spinor: w.spinor, momentum: w.momentum, k, eps, e }
    }

    /// The potential this field solves the equation in.
    pub fn potential(&self) -> crate::WavePotential {
        crate::WavePotential { eps: self.eps, k: self.k.covector_components(), phase: 0.0 }
    }
}

impl Field for Volkov {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        Ok(self.jet(p)?.v)
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let e = self.e;
        let kl = self.k.covector_components();
        let pl = self.momentum.covector_components();
        let kp = self.k.scalar_product(&self.momentum);
        let ep = self.eps.scalar_product(&self.momentum);
        let ee = self.eps.scalar_product(&self.eps);
        let xi = p.pair(&kl);
        let (sx, cx) = xi.sin_cos();
        let c = e / (2.0 * kp);
        let ke = self.k * self.eps;

        let a1 = e * ep / kp;
        let a2 = e * e * ee / (2.0 * kp);
        let s = p.pair(&pl) + a1 * (1.0 - cx) - a2 * (xi / 2.0 - (2.0 * xi).sin() / 4.0);
        let s1 = a1 * sx - a2 * sx * sx;
        let s2 = a1 * cx - a2 * 2.0 * sx * cx;

        let i = g21::<f64>();
        let (ss, cs) = (-s).sin_cos();
        let ph = Mv::scalar(cs) + i * ss;
        let phase = Jet {
            v: ph,
            d: std::array::from_fn(|mu| i * ph * -(pl[mu] + s1 * kl[mu])),
            dd: std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    let sa = pl[a] + s1 * kl[a];
                    let sb = pl[b] + s1 * kl[b];
                    (i * (-s2 * kl[a] * kl[b]) - Mv::scalar(sa * sb)) * ph
                })
            }),
        };
        let modulation = Jet {
            v: Mv::one() + ke * (c * sx),
            d: kl.map(|k| ke * (c * cx * k)),
            dd: std::array::from_fn(|a| std::array::from_fn(|b| ke * (-c * sx * kl[a] * kl[b]))),
        };
        Ok(modulation.product(&Jet::constant(self.spinor)).product(&phase))
    }
}
