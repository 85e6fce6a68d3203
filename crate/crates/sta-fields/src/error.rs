use sta_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("field value is not even (odd part norm {odd_norm:e})")]
    NotEven { odd_norm: f64 },
    #[error("point is within the lattice boundary layer (time index {index}, {levels} levels)")]
    BoundaryPoint { index: isize, levels: usize },
    #[error("point {x:?} does not lie on the lattice")]
    OffLattice { x: [f64; 4] },
    #[error("time step {dt} exceeds the CFL bound dx = {dx}")]
    CflViolation { dt: f64, dx: f64 },
    #[error("initial data has odd part of norm {odd_norm:e} at cell {cell}")]
    NonEvenInitial { cell: usize, odd_norm: f64 },
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("potential is not representable on a 1+1D periodic lattice: {0}")]
    UnsupportedPotential(String),
    #[error("field is undefined at {x:?}: {reason}")]
    Undefined { x: [f64; 4], reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error)]
pub enum SnapshotError {
    #[error("bad snapshot magic")]
    BadMagic,
    #[error("snapshot truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("snapshot payload width {0} is not supported")]
    Width(u32),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
