use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// The argument squares to something with non-scalar content, so the
    /// closed-form exponential does not apply.
    #[error("argument square has non-scalar part of size {residual:e}")]
    NonScalarSquare { residual: f64 },
    #[error("expected an even multivector, odd part has norm {odd_norm:e}")]
    NotEven { odd_norm: f64 },
    #[error("spinor is singular: |φφ̃| = {rho:e} is below threshold")]
    SingularSpinor { rho: f64 },
}
