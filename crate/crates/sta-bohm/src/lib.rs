//! Bohm-style readings of a Dirac-Hestenes spinor field.
//!
//! * [`polar_decompose`] writes φ = R e^{βγ_5/2} U with a Lorentz rotor U.
//! * [`classical_dhsf`] builds φ = R 𝔑(Π) e^{Sγ_21} from a phase S.
//! * [`GhjeTerms`] carries the pieces of the generalized Hamilton-Jacobi equation for
//!   ψ = ψ₀ e^{βγ_5/2} e^{Sγ_21}, with a selectable quantum potential.
//! * [`pw_quantities`] splits ∂^μφ Kφ̃ = ρ(P^μ − W^μ).
//!
//! ```
//! use sta_bohm::polar_decompose;
//! use sta_core::{gamma5, Mv};
//!
//! let d = polar_decompose(&gamma5()).unwrap();
//! assert_eq!(d.beta, std::f64::consts::PI);
//! assert!(d.u.distance(&Mv::one()) < 1e-15);
//! ```

mod classical;
mod error;
mod ghje;
mod polar;
mod pw;

pub use classical::{classical_dhsf, ClassicalSpinor, NVariant};
pub use error::BohmError;
pub use ghje::{
    constraint_residual, effective_mass, ghje_residual, ghje_terms, ghje_terms_of,
    quantum_potential, ConstraintVariant, GhjeTerms, QVariant, BETA_FLOOR,
};
pub use polar::{
    half_beta, polar_decompose, polar_decompose_with, takabayashi, PolarDecomposition,
};
pub use pw::{
    momentum_split_residual, momentum_split_residual_of, pw_equation_residuals, pw_identities,
    pw_identities_of, pw_quantities, pw_quantities_of, PwEquations, PwGates, PwIdentities,
    PwQuantities, PwVariant,
};
