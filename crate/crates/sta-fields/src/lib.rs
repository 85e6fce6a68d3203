//! Multivector fields on Minkowski space and the operators acting on them.
//!
//! Every field implements [`Field`], which returns values and jets (first and second
//! partial derivatives). Analytic families carry closed-form derivatives; [`FiniteDifference`]
//! and [`LatticeField`] supply central differences instead. Residuals are measured with the
//! Euclidean norm of the 16 coefficients.
//!
//! The phase convention is fixed by the free rest wave exp(−m x⁰ γ_21), which annihilates
//! ∂φγ_21 − eAφ − mφγ_0. Gauge functions χ act as φ ↦ φ exp(−eχγ_21), A ↦ A + ∂χ.
//!
//! ```
//! use sta_fields::{dhe_residual, PlaneWave, PotentialSpec, SpacetimePoint};
//! let wave = PlaneWave::rest(1.0);
//! let p = SpacetimePoint::new([0.3, 0.0, 0.0, 0.0]);
//! let r = dhe_residual(&wave, &PotentialSpec::free(1.0), &p).unwrap();
//! assert!(r.norm() < 1e-14);
//! ```

mod error;
pub mod fd;
mod field;
mod jet;
pub mod lattice;
mod ops;
mod point;
mod potential;
mod scalar_field;
pub mod snapshot;
pub mod sweep;

pub use error::{FieldError, SnapshotError};
pub use fd::{FdOrder, FiniteDifference};
pub use field::{
    boost_rotor, rotation_rotor, ConstantField, Field, FnField, GaugeDressed, Modulated, PlaneWave,
    PolynomialField, ProductField, SharedField, Superposition, Volkov,
};
pub use jet::{Dual, Jet, ScalarJet};
pub use lattice::{evolve_dhe, evolve_dhe_with, LatticeField, LatticeSlice};
pub use ops::{
    adjoint_dhe_residual, adjoint_dhe_residual_of, dhe_residual, dhe_residual_of, dirac_of, dirac_operator,
    dirac_split, faraday, ideal_dirac_residual, identity_vc, require_even, squared_equation_residual,
    squared_residual_of, DiracSplit, EVEN_TOL,
};
pub use point::SpacetimePoint;
pub use potential::{
    faraday_bivector, split_faraday, FGauge, LinearPotential, PotentialFamily, PotentialSpec, VectorPotential,
    WavePotential, FARADAY_BLADES,
};
pub use scalar_field::{Gaussian, Quadratic, ScalarField, Sinusoid};
pub use snapshot::Snapshot;
pub use sweep::{sweep, ResidualStats, SampleBox};
