//! Named elements used throughout the Dirac-Hestenes formalism.

use crate::{Multivector, Scalar};

/// γ_5 = γ^0γ^1γ^2γ^3 = −γ_0γ_1γ_2γ_3; squares to −1 and anticommutes with vectors.
pub fn gamma5<T: Scalar>() -> Multivector<T> {
    -Multivector::blade(0b1111)
}

/// γ_21 = γ_2γ_1, the bivector generating the spinor phase.
pub fn g21<T: Scalar>() -> Multivector<T> {
    -Multivector::blade(0b0110)
}

/// γ_12 = γ_1γ_2.
pub fn g12<T: Scalar>() -> Multivector<T> {
    Multivector::blade(0b0110)
}

/// The trivector γ_21γ_0 = −γ_0γ_1γ_2 appearing in the energy-momentum density φKφ̃ = γ_5 s.
pub fn k_trivector<T: Scalar>() -> Multivector<T> {
    g21::<T>() * Multivector::gamma(0)
}

/// Product γ_{μ1}γ_{μ2}… of lowered basis vectors.
pub fn gammas<T: Scalar>(indices: &[usize]) -> Multivector<T> {
    indices.iter().fold(Multivector::one(), |acc, &mu| acc * Multivector::gamma(mu))
}
