use crate::{AlgebraError, Multivector, Scalar};

/// Relative tolerance on the non-scalar part of a² in [`Multivector::exp_commuting_square`].
pub const DEFAULT_SQUARE_TOL: f64 = 1e-12;

/// Default lower bound on |φφ̃| for [`Multivector::invert_spinor`].
pub const DEFAULT_RHO_MIN: f64 = 1e-12;

impl<T: Scalar> Multivector<T> {
    /// exp(a) for an `a` whose square is a scalar.
    pub fn exp_commuting_square(&self) -> Result<Self, AlgebraError> {
        self.exp_commuting_square_tol(T::of(DEFAULT_SQUARE_TOL))
    }

    pub fn exp_commuting_square_tol(&self, tol: T) -> Result<Self, AlgebraError> {
        let sq = *self * *self;
        let s = sq.scalar_part();
        let rest = sq - Self::scalar(s);
        let scale = self.norm() * self.norm();
        if rest.norm() > tol * scale.max(T::one()) {
            return Err(AlgebraError::NonScalarSquare { residual: rest.norm().as_f64() });
        }
        if s < T::zero() {
            let th = (-s).sqrt();
            Ok(Self::scalar(th.cos()) + *self * (th.sin() / th))
        } else if s > T::zero() {
            let th = s.sqrt();
            Ok(Self::scalar(th.cosh()) + *self * (th.sinh() / th))
        } else {
            Ok(Self::one() + *self)
        }
    }

    /// Truncated Taylor series Σ_{n ≤ order} aⁿ/n!, for arguments without a scalar square.
    pub fn exp_series(&self, order: usize) -> Self {
        let mut term = Self::one();
        let mut sum = Self::one();
        for n in 1..=order {
            term = term * *self / T::of(n as f64);
            sum += term;
        }
        sum
    }

    /// φ⁻¹ = φ̃ (φφ̃)⁻¹ for even φ; φφ̃ = a + bγ_5 inverts as (a − bγ_5)/(a² + b²).
    pub fn invert_spinor(&self) -> Result<Self, AlgebraError> {
        self.invert_spinor_with(T::of(DEFAULT_RHO_MIN))
    }

    pub fn invert_spinor_with(&self, rho_min: T) -> Result<Self, AlgebraError> {
        let odd = self.odd_norm();
        if odd > T::of(1e-12) * self.norm().max(T::one()) {
            return Err(AlgebraError::NotEven { odd_norm: odd.as_f64() });
        }
        let rev = self.reverse();
        let p = *self * rev;
        let (a, b) = (p.scalar_part(), p.pseudoscalar_part());
        let rho2 = a * a + b * b;
        let rho = rho2.sqrt();
        if !(rho >= rho_min) {
            return Err(AlgebraError::SingularSpinor { rho: rho.as_f64() });
        }
        let inv = (Self::scalar(a) - crate::gamma5::<T>() * b) / rho2;
        Ok(rev * inv)
    }
}
