use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("input is not a filiform Lie algebra")]
    NotFiliformLie,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("[L, I] is not zero")]
    NotRightAnnihilated,
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
