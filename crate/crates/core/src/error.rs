use thiserror::Error;

use crate::mpoly::MPoly;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("modulus is not irreducible over Q")]
    Reducible,
    #[error("common component: {0}")]
    CommonComponent(MPoly),
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("root finding did not converge for degree {degree} (try a higher precision)")]
    NoConvergence { degree: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
