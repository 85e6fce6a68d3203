use num_complex::Complex;
use sta_core::{g12, g21, ComplexMultivector, Multivector, Scalar};
use thiserror::Error;

use crate::{gamma_matrix, rep_real, unrep, ComplexMatrix4, RepScalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("expected an even multivector, odd part has norm {odd_norm:e}")]
    NotEven { odd_norm: f64 },
    #[error("matrix is not in the left ideal: columns 2-4 have norm {excess:e}")]
    NotInIdeal { excess: f64 },
}

/// f = ½(1 + γ_0)·½(1 + iγ_1γ_2).
pub fn make_idempotent_f<T: Scalar>() -> ComplexMultivector<T> {
    let half = T::of(0.5);
    let a = ComplexMultivector::from((Multivector::one() + Multivector::gamma(0)) * half);
    let b = ComplexMultivector::new(Multivector::scalar(half), g12::<T>() * half);
    a * b
}

/// f̃* = ½(1 − iγ_21)·½(1 + γ_0), the reverse-conjugate of f.
pub fn f_tilde_star<T: Scalar>() -> ComplexMultivector<T> {
    let half = T::of(0.5);
    let a = ComplexMultivector::new(Multivector::scalar(half), -g21::<T>() * half);
    let b = ComplexMultivector::from((Multivector::one() + Multivector::gamma(0)) * half);
    a * b
}

/// ½(1 ± γ_0)·½(1 ± iγ_12) in the order (+,+), (+,−), (−,+), (−,−); they sum to 1.
pub fn primitive_idempotents<T: Scalar>() -> [ComplexMultivector<T>; 4] {
    let half = T::of(0.5);
    std::array::from_fn(|k| {
        let s0 = if k < 2 { T::one() } else { -T::one() };
        let s1 = if k % 2 == 0 { T::one() } else { -T::one() };
        let a = ComplexMultivector::from((Multivector::one() + Multivector::gamma(0) * s0) * half);
        let b = ComplexMultivector::new(Multivector::scalar(half), g12::<T>() * (s1 * half));
        a * b
    })
}

/// Column spinor (ψ_1, …, ψ_4) of the ideal element φf.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct IdealSpinor<T> {
    pub psi: [Complex<T>; 4],
}

impl<T: Scalar> IdealSpinor<T> {
    pub fn new(psi: [Complex<T>; 4]) -> Self {
        Self { psi }
    }

    pub fn zero() -> Self {
        Self::new([Complex::new(T::zero(), T::zero()); 4])
    }

    /// The 4×4 ideal element, with the spinor in the first column.
    pub fn to_matrix(&self) -> ComplexMatrix4<T> {
        let mut m = ComplexMatrix4::zero();
        for i in 0..4 {
            m.m[i][0] = self.psi[i];
        }
        m
    }

    pub fn from_matrix(m: &ComplexMatrix4<T>) -> Result<Self, RepError> {
        let excess = (0..4)
            .flat_map(|i| (1..4).map(move |j| (i, j)))
            .fold(T::zero(), |acc, (i, j)| acc + m.m[i][j].norm_sqr())
            .sqrt();
        let scale = m.frobenius().max(T::one());
        if excess > T::of(1e-12) * scale {
            return Err(RepError::NotInIdeal { excess: excess.as_f64() });
        }
        Ok(Self::new(m.column(0)))
    }

    pub fn norm(&self) -> T {
        self.psi.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    pub fn scale(&self, z: Complex<T>) -> Self {
        Self::new(self.psi.map(|x| x * z))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.psi[i] + other.psi[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.psi[i] - other.psi[i]))
    }
}

/// Matrix of an even φ in terms of the first column ψ of rep(φ):
/// each even element is fixed by its first column.
pub fn spinor_matrix<T: Scalar>(psi: &IdealSpinor<T>) -> ComplexMatrix4<T> {
    let [p1, p2, p3, p4] = psi.psi;
    ComplexMatrix4::from_rows([
        [p1, -p2.conj(), p3, p4.conj()],
        [p2, p1.conj(), p4, -p3.conj()],
        [p3, p4.conj(), p1, -p2.conj()],
        [p4, -p3.conj(), p2, p1.conj()],
    ])
}

pub fn ideal_from_dhs<T: RepScalar>(phi: &Multivector<T>) -> Result<IdealSpinor<T>, RepError> {
    let odd = phi.odd_norm();
    if odd > T::of(1e-12) * phi.norm().max(T::one()) {
        return Err(RepError::NotEven { odd_norm: odd.as_f64() });
    }
    Ok(IdealSpinor::new(rep_real(phi).column(0)))
}

pub fn dhs_from_ideal<T: RepScalar>(psi: &IdealSpinor<T>) -> Multivector<T> {
    unrep(&spinor_matrix(psi)).re
}

/// Matrix Dirac conjugate Φ†γ̲_0.
pub fn dirac_conjugate<T: Scalar>(phi: &ComplexMatrix4<T>) -> ComplexMatrix4<T> {
    phi.adjoint() * gamma_matrix(0)
}

/// Algebra-side Dirac conjugate f̃*φ̃ of the ideal element φf.
pub fn clifford_dirac_conjugate<T: Scalar>(phi: &Multivector<T>) -> ComplexMultivector<T> {
    f_tilde_star::<T>() * ComplexMultivector::from(phi.reverse())
}

/// i γ̲^μ ∂_μψ − e γ̲^μ A_μ ψ − mψ, given ψ, its four partial derivatives and
/// the covariant components of eA.
pub fn dirac_residual<T: Scalar>(
    psi: &IdealSpinor<T>,
    dpsi: &[IdealSpinor<T>; 4],
    m: T,
    ea: [T; 4],
) -> IdealSpinor<T> {
    let i = Complex::new(T::zero(), T::one());
    let mut out = psi.scale(Complex::new(-m, T::zero()));
    let eta = [T::one(), -T::one(), -T::one(), -T::one()];
    for mu in 0..4 {
        let g_up = gamma_matrix::<T>(mu).scale(Complex::new(eta[mu], T::zero()));
        let kinetic = IdealSpinor::new(g_up.apply(&dpsi[mu].psi)).scale(i);
        let coupling = IdealSpinor::new(g_up.apply(&psi.psi)).scale(Complex::new(ea[mu], T::zero()));
        out = out.add(&kinetic).sub(&coupling);
    }
    out
}

/// i ∂_μΦ_R γ̲^μ + mΦ_R for a row-form conjugate spinor and its derivatives.
pub fn conjugate_dirac_residual<T: Scalar>(
    phi_r: &ComplexMatrix4<T>,
    d_phi_r: &[ComplexMatrix4<T>; 4],
    m: T,
) -> ComplexMatrix4<T> {
    let i = Complex::new(T::zero(), T::one());
    let eta = [T::one(), -T::one(), -T::one(), -T::one()];
    (0..4).fold(phi_r.scale(Complex::new(m, T::zero())), |acc, mu| {
        acc + (d_phi_r[mu] * gamma_matrix(mu)).scale(i * eta[mu])
    })
}
