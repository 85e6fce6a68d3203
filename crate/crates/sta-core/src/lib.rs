//! Real spacetime algebra Cl(1,3) with signature (+,−,−,−).
//!
//! Multivectors are dense 16-coefficient values indexed by blade bitmask.
//! Every product is driven by one compile-time sign table, so sign
//! conventions live in exactly one place. The index-raising rule is
//! γ^0 = γ_0, γ^k = −γ_k.
//!
//! ```
//! use sta_core::{Mv, gamma5};
//! let g5 = gamma5::<f64>();
//! assert_eq!(g5 * g5, Mv::scalar(-1.0));
//! let v = Mv::gamma(0) + Mv::gamma(1) * 2.0;
//! assert_eq!(v.reverse(), v);
//! ```

mod basis;
mod complex;
mod error;
mod exp;
mod multivector;
mod scalar;
pub mod table;

pub use basis::{g12, g21, gamma5, gammas, k_trivector};
pub use complex::{ComplexMultivector, ComplexScalar};
pub use error::AlgebraError;
pub use exp::{DEFAULT_RHO_MIN, DEFAULT_SQUARE_TOL};
pub use multivector::Multivector;
pub use scalar::Scalar;

pub type Mv = Multivector<f64>;
pub type Mv32 = Multivector<f32>;
pub type ComplexMv = ComplexMultivector<f64>;
