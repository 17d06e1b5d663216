use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent on non-Laurent variable `{0}`")]
    NegativeExponent(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("shape mismatch")]
    ShapeMismatch,
    #[error("not a linear form")]
    NotLinear,
    #[error("value is not a polynomial")]
    NotPolynomial,
}
