//! Energy-momentum, spin and angular-momentum densities and their balance laws.
//!
//! Everything is computed from the jet of φ at one point, so the same code serves analytic
//! families and lattice fields. Families indexed by γ^μ are carried as [`Dual`]s, and their
//! divergence is Σ_μ ∂_μ of the μ-th entry.

use sta_core::{gamma5, k_trivector, Mv};
use sta_fields::{dhe_residual_of, Dual, Field, Jet, PotentialSpec, SpacetimePoint};

use crate::{current_dual, spin_dual, Extensor11, ExtensorError};

/// Residual gate for analytic fields.
pub const DEFAULT_GATE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BalanceOptions {
    /// Largest DHE residual norm at which a balance law is evaluated.
    pub gate: f64,
    /// Origin of the position 1-form x.
    pub origin: SpacetimePoint,
}

impl Default for BalanceOptions {
    fn default() -> Self {
        Self { gate: DEFAULT_GATE, origin: SpacetimePoint::origin() }
    }
}

impl BalanceOptions {
    /// Gate 10·dz² for lattice fields.
    pub fn lattice(dz: f64) -> Self {
        Self { gate: 10.0 * dz * dz, ..Self::default() }
    }
}

/// Jet of φ, coupled potential eA, and the position 1-form at one point.
#[derive(Clone, Copy, Debug)]
pub struct Local {
    pub jet: Jet,
    /// eA with its derivatives.
    pub ea: Dual,
    /// F = ∂∧A (without the coupling).
    pub faraday: Mv,
    pub e: f64,
    pub m: f64,
    /// x − origin with ∂_μx = γ_μ.
    pub x: Dual,
}

impl Local {
    pub fn at(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint, origin: &SpacetimePoint) -> Result<Self, ExtensorError> {
        let jet = phi.jet(p)?;
        sta_fields::require_even(&jet.v)?;
        Ok(Self {
            jet,
            ea: pot.ea_dual(p),
            faraday: pot.faraday(p),
            e: pot.e,
            m: pot.m,
            x: Dual::new(p.position(origin), std::array::from_fn(Mv::gamma)),
        })
    }

    pub fn phi(&self) -> Dual {
        self.jet.dual()
    }

    pub fn dhe_residual(&self) -> Mv {
        dhe_residual_of(&self.phi(), &self.ea.v, self.m)
    }

    pub fn require_solution(&self, gate: f64) -> Result<(), ExtensorError> {
        let residual = self.dhe_residual().norm();
        if residual > gate || residual.is_nan() {
            Err(ExtensorError::NotASolution { residual, gate })
        } else {
            Ok(())
        }
    }

    pub fn current(&self) -> Dual {
        current_dual(&self.phi())
    }

    pub fn spin(&self) -> Dual {
        spin_dual(&self.phi())
    }

    /// eA^μ as a scalar dual.
    pub fn ea_up(&self, mu: usize) -> Dual {
        self.ea.map_linear(|a| Mv::scalar(a.vector_components()[mu]))
    }

    /// ⟨∂^μφ Kφ̃⟩₁ for each μ: T_D†(γ^μ).
    pub fn free_momentum_images(&self) -> [Dual; 4] {
        let k = Dual::constant(k_trivector::<f64>());
        let rev = self.phi().reverse();
        std::array::from_fn(|mu| (self.jet.derivative_up(mu) * k * rev).grade(1))
    }

    /// T†(γ^μ) = ⟨∂^μφ Kφ̃⟩₁ − eA^μ J.
    pub fn momentum_images(&self) -> [Dual; 4] {
        let j = self.current();
        let free = self.free_momentum_images();
        std::array::from_fn(|mu| free[mu] - self.ea_up(mu) * j)
    }

    /// S(γ^μ) = ½γ_5(s∧γ^μ).
    pub fn spin_images(&self) -> [Dual; 4] {
        let s = self.spin();
        let g5 = gamma5::<f64>();
        std::array::from_fn(|mu| g5 * s.wedge(&Dual::constant(Mv::gamma_up(mu))).scale(0.5))
    }

    /// e F⌞J = e⟨FJ⟩₁, the Lorentz force density.
    pub fn lorentz_force(&self) -> Mv {
        (self.faraday * self.current().v).grade(1) * self.e
    }
}

/// Images T(γ^μ) from images T†(γ^ν): T(γ^μ) = Σ_ν (γ^μ·T†(γ^ν)) γ_ν.
pub fn adjoint_images(images: &[Dual; 4]) -> [Dual; 4] {
    std::array::from_fn(|mu| {
        let g = Mv::gamma_up(mu);
        (0..4)
            .map(|nu| images[nu].map_linear(|v| Mv::scalar(g.scalar_product(&v.grade(1)))) * Mv::gamma(nu))
            .fold(Dual::default(), |a, b| a + b)
    })
}

pub fn divergence(images: &[Dual; 4]) -> Mv {
    Dual::divergence(images)
}

pub fn extensor_of(images: &[Dual; 4]) -> Extensor11 {
    Extensor11::from_images(&images.map(|d| d.v))
}

/// T† at p, from ⟨∂^μφ Kφ̃⟩₁ − eA^μ J; T itself is its adjoint.
pub fn energy_momentum(phi: &dyn Field, pot: &PotentialSpec, p: &SpacetimePoint) -> Result<Extensor11, ExtensorError> {
    let local = Local::at(phi, pot, p, &SpacetimePoint::origin())?;
    Ok(extensor_of(&local.momentum_images()))
}

/// div T† − e F⌞J.
pub fn momentum_balance_residual(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    opts: &BalanceOptions,
) -> Result<Mv, ExtensorError> {
    let local = Local::at(phi, pot, p, &opts.origin)?;
    local.require_solution(opts.gate)?;
    Ok(momentum_balance_of(&local))
}

pub fn momentum_balance_of(local: &Local) -> Mv {
    divergence(&local.momentum_images()) - local.lorentz_force()
}

/// Residual of T − T† = n⌟(∂_κS(γ^κ)) on each basis 1-form, plus the component form
/// T^{μν} − T^{νμ} − (γ^ν∧γ^μ)⌟∂_κS(γ^κ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinSource {
    pub images: [Mv; 4],
    pub components: [[f64; 4]; 4],
}

impl SpinSource {
    pub fn max_abs(&self) -> f64 {
        let a = self.images.iter().map(Mv::norm).fold(0.0, f64::max);
        self.components.iter().flatten().fold(a, |m, x| m.max(x.abs()))
    }
}

pub fn spin_source_residual(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    opts: &BalanceOptions,
) -> Result<SpinSource, ExtensorError> {
    let local = Local::at(phi, pot, p, &opts.origin)?;
    local.require_solution(opts.gate)?;
    Ok(spin_source_of(&local))
}

pub fn spin_source_of(local: &Local) -> SpinSource {
    let tdag = extensor_of(&local.momentum_images());
    let t = tdag.adjoint();
    let div_s = divergence(&local.spin_images());
    let images = std::array::from_fn(|mu| t.image(mu) - tdag.image(mu) - Mv::gamma_up(mu).left_contract(&div_s));
    let components = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let b = Mv::gamma_up(nu).wedge(&Mv::gamma_up(mu));
            t.t[mu][nu] - t.t[nu][mu] - b.left_contract(&div_s).scalar_part()
        })
    });
    SpinSource { images, components }
}

/// div[T(γ^μ)∧x + S(γ^μ)] − e(F⌞J)∧x.
pub fn angular_momentum_balance_residual(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    opts: &BalanceOptions,
) -> Result<Mv, ExtensorError> {
    let local = Local::at(phi, pot, p, &opts.origin)?;
    local.require_solution(opts.gate)?;
    Ok(angular_balance_of(&local))
}

pub fn angular_balance_of(local: &Local) -> Mv {
    let t = adjoint_images(&local.momentum_images());
    let s = local.spin_images();
    let total: [Dual; 4] = std::array::from_fn(|mu| t[mu].wedge(&local.x) + s[mu]);
    divergence(&total) - local.lorentz_force().wedge(&local.x.v)
}

/// Aharonov-Bohm divergences for the free-field densities T_D in a pure-gauge region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AharonovBohm {
    /// div T_D† − e∂_μ(A^μJ).
    pub momentum_residual: Mv,
    /// div[T_D†∧x − S] − e∂_μ(A^μ J∧x).
    pub angular_residual: Mv,
    /// div T_D†, nonzero when A ≠ 0 varies against J.
    pub divergence_td: Mv,
    pub divergence_jd: Mv,
}

/// Tolerance on |F| for the pure-gauge precondition.
pub const PURE_GAUGE_TOL: f64 = 1e-10;

pub fn aharonov_bohm_check(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    opts: &BalanceOptions,
) -> Result<AharonovBohm, ExtensorError> {
    let local = Local::at(phi, pot, p, &opts.origin)?;
    let faraday = local.faraday.norm();
    if faraday > PURE_GAUGE_TOL {
        return Err(ExtensorError::NotPureGauge { faraday });
    }
    local.require_solution(opts.gate)?;
    Ok(aharonov_bohm_of(&local))
}

pub fn aharonov_bohm_of(local: &Local) -> AharonovBohm {
    let td = local.free_momentum_images();
    let s = local.spin_images();
    let j = local.current();
    let jd: [Dual; 4] = std::array::from_fn(|mu| td[mu].wedge(&local.x) - s[mu]);
    let source: [Dual; 4] = std::array::from_fn(|mu| local.ea_up(mu) * j);
    let angular_source: [Dual; 4] = std::array::from_fn(|mu| source[mu].wedge(&local.x));
    let divergence_td = divergence(&td);
    let divergence_jd = divergence(&jd);
    AharonovBohm {
        momentum_residual: divergence_td - divergence(&source),
        angular_residual: divergence_jd - divergence(&angular_source),
        divergence_td,
        divergence_jd,
    }
}

/// Spin equation of motion: bivector part ½⟨∂(γ_5s)⟩₂ + γ^μ∧⟨∂_μφKφ̃⟩₁ − eA∧J and
/// scalar companion γ^μ·⟨∂_μφKφ̃⟩₁ − eA·J − m⟨φφ̃⟩₀.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinMotion {
    pub bivector: Mv,
    pub scalar: f64,
}

pub fn spin_motion_residual(
    phi: &dyn Field,
    pot: &PotentialSpec,
    p: &SpacetimePoint,
    opts: &BalanceOptions,
) -> Result<SpinMotion, ExtensorError> {
    let local = Local::at(phi, pot, p, &opts.origin)?;
    local.require_solution(opts.gate)?;
    Ok(spin_motion_of(&local))
}

fn lowered_densities(local: &Local, x: &Mv) -> [Mv; 4] {
    let rev = local.jet.v.reverse();
    std::array::from_fn(|mu| (local.jet.d[mu] * *x * rev).grade(1))
}

pub fn spin_motion_of(local: &Local) -> SpinMotion {
    let k = k_trivector::<f64>();
    let g5s = gamma5::<f64>() * local.spin();
    let dens = lowered_densities(local, &k);
    let (a, j) = (local.ea.v, local.current().v);
    let wedge: Mv = (0..4).map(|mu| Mv::gamma_up(mu).wedge(&dens[mu])).sum();
    let dot: f64 = (0..4).map(|mu| Mv::gamma_up(mu).scalar_product(&dens[mu])).sum();
    let rho0 = (local.jet.v * local.jet.v.reverse()).scalar_part();
    SpinMotion {
        bivector: g5s.dirac().grade(2) * 0.5 + wedge - a.wedge(&j),
        scalar: dot - a.scalar_product(&j) - local.m * rho0,
    }
}

/// ½∂(γ_5s) + γ^μ⟨∂_μφKφ̃⟩₁ − eAJ − mφφ̃.
pub fn momentum_identity_of(local: &Local) -> Mv {
    let k = k_trivector::<f64>();
    let g5s = gamma5::<f64>() * local.spin();
    let dens = lowered_densities(local, &k);
    let sum: Mv = (0..4).map(|mu| Mv::gamma_up(mu) * dens[mu]).sum();
    let phi = local.jet.v;
    g5s.dirac() * 0.5 + sum - local.ea.v * local.current().v - phi * phi.reverse() * local.m
}

/// ½∂J + γ^μ⟨∂_μφγ_0φ̃⟩₃ + eAγ_5s + mφγ_21φ̃.
pub fn current_identity_of(local: &Local) -> Mv {
    let phi = local.jet.v;
    let rev = phi.reverse();
    let sum: Mv = (0..4).map(|mu| Mv::gamma_up(mu) * (local.jet.d[mu] * Mv::gamma(0) * rev).grade(3)).sum();
    let s = local.spin().v;
    local.current().dirac() * 0.5 + sum + local.ea.v * gamma5::<f64>() * s + phi * sta_core::g21::<f64>() * rev * local.m
}

/// (∂φ)γ_0φ̃ + eAφKφ̃ + mφγ_21φ̃, the product identity behind the current law.
pub fn current_product_identity_of(local: &Local) -> Mv {
    let phi = local.jet.v;
    let rev = phi.reverse();
    local.phi().dirac() * Mv::gamma(0) * rev
        + local.ea.v * phi * k_trivector::<f64>() * rev
        + phi * sta_core::g21::<f64>() * rev * local.m
}

/// tr T − m⟨φφ̃⟩₀.
pub fn trace_identity_of(local: &Local) -> f64 {
    let phi = local.jet.v;
    extensor_of(&local.momentum_images()).trace() - local.m * (phi * phi.reverse()).scalar_part()
}

/// bif T − ½γ_5(∂∧s), and bif T + ∂_μS(γ^μ).
pub fn bif_identities_of(local: &Local) -> (Mv, Mv) {
    let bif = extensor_of(&local.momentum_images()).adjoint().bif();
    let s = local.spin();
    let curl: Mv = (0..4).map(|mu| Mv::gamma_up(mu).wedge(&s.d[mu])).sum();
    (bif - gamma5::<f64>() * curl * 0.5, bif + divergence(&local.spin_images()))
}

/// div T − div T†.
pub fn adjoint_divergence_gap_of(local: &Local) -> Mv {
    let tdag = local.momentum_images();
    divergence(&adjoint_images(&tdag)) - divergence(&tdag)
}
