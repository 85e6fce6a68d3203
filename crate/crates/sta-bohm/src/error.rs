use sta_core::AlgebraError;
use sta_fields::FieldError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BohmError {
    #[error("ln β is undefined at β = {beta}")]
    BetaDomain { beta: f64 },
    #[error("Takabayashi angle {beta:e} exceeds the tolerance {tol:e}")]
    NonzeroBeta { beta: f64, tol: f64 },
    #[error("field does not solve the free equation here (residual {residual:e})")]
    NotASolution { residual: f64 },
    #[error("the potential must vanish for this check")]
    NotFree,
    #[error("normalisation denominator {value} is not positive")]
    DegenerateDenominator { value: f64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
