use sta_core::AlgebraError;
use sta_fields::FieldError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtensorError {
    #[error("field does not solve the equation here (residual {residual:e} above gate {gate:e})")]
    NotASolution { residual: f64, gate: f64 },
    #[error("potential is not pure gauge (|F| = {faraday:e})")]
    NotPureGauge { faraday: f64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
