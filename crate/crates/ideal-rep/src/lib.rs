//! The complex 4×4 matrix image of the spacetime algebra (Dirac basis),
//! primitive idempotents, minimal left ideal spinors and the standard Dirac
//! equation. The representation doubles as a brute-force oracle for the
//! multivector kernel.

mod ideal;
mod matrix;
mod rep;

pub use ideal::{
    clifford_dirac_conjugate, conjugate_dirac_residual, dhs_from_ideal, dirac_conjugate,
    dirac_residual, f_tilde_star, ideal_from_dhs, make_idempotent_f, primitive_idempotents,
    spinor_matrix, IdealSpinor, RepError,
};
pub use matrix::ComplexMatrix4;
pub use rep::{gamma_matrix, rep, rep_real, unrep, RepScalar, RepTables};

pub type Matrix = ComplexMatrix4<f64>;
pub type Spinor = IdealSpinor<f64>;
