//! Bilinear covariants, extensors and balance laws of Dirac-Hestenes fields.
//!
//! A (1,1)-extensor is stored by its components T^{μν} = T(γ^μ)·γ^ν; the adjoint is the
//! transpose. The energy-momentum extensor is assembled from
//! T†(γ^μ) = ⟨∂^μφ Kφ̃⟩₁ − eA^μJ with K = γ_21γ_0, and every balance law is evaluated
//! pointwise from the jet of φ. The laws refuse to run where φ is not a solution to within
//! [`BalanceOptions::gate`].
//!
//! ```
//! use sta_extensors::energy_momentum;
//! use sta_fields::{PlaneWave, PotentialSpec, SpacetimePoint};
//! let t = energy_momentum(&PlaneWave::rest(2.0), &PotentialSpec::free(2.0), &SpacetimePoint::origin()).unwrap();
//! assert!((t.t[0][0] - 2.0).abs() < 1e-14);
//! assert!((t.trace() - 2.0).abs() < 1e-14);
//! ```

pub mod balance;
mod bilinear;
mod error;
mod extensor;
mod field;

pub use balance::{
    aharonov_bohm_check, angular_momentum_balance_residual, energy_momentum, momentum_balance_residual,
    spin_motion_residual, spin_source_residual, AharonovBohm, BalanceOptions, Local, SpinMotion, SpinSource,
    DEFAULT_GATE, PURE_GAUGE_TOL,
};
pub use bilinear::{
    bilinears, bilinears_with, current, current_dual, current_divergence, rho_beta, spin, spin_dual, BilinearSet,
};
pub use error::ExtensorError;
pub use extensor::{spin_extensor, Extensor11, Extensor12};
pub use field::{extensor_divergence, position_wedge_identity, total_charge, EnergyMomentumField, ExtensorField, MomentumKind};
