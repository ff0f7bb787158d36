use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MirrorError {
    #[error("matrix is not of invertible type: {0}")]
    NotInvertible(String),
    #[error("index {ell} does not divide d_max = {d_max}")]
    BadIndex { ell: u32, d_max: u32 },
    #[error("closed form and Jacobian oracle disagree: {closed} vs {oracle}")]
    OracleMismatch { closed: u64, oracle: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("morphism is not closed")]
    NotClosed,
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("route A and route B disagree: {0}")]
    RouteMismatch(String),
    #[error("unsupported case: {reason}")]
    UnsupportedCase { reason: String, reduction: Option<String> },
    #[error("surface invariants inconsistent: {0}")]
    InconsistentInvariants(String),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, MirrorError>;
