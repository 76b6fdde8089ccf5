use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero element of Q(q)")]
    DivisionByZero,
    #[error("q-integer [{0}] requested for a negative argument")]
    NegativeQInteger(i64),
    #[error("evaluation at a pole: |denominator(q)| = {magnitude:e} at kappa = {kappa}")]
    Pole { kappa: f64, magnitude: f64 },
    #[error("kappa must be a positive finite real, got {0}")]
    InvalidKappa(f64),
    #[error("q = 1 specialization hits a zero denominator")]
    PoleAtOne,
    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),
    #[error("parse error at index {index}: {reason}")]
    Parse { index: usize, reason: String },
    #[error("column {j} is out of range 1..={max}")]
    ColumnOutOfRange { j: usize, max: usize },
    #[error("paths have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("no wedge at column {0}")]
    NotAWedge(usize),
    #[error("tile height must be at least 1, got {0}")]
    InvalidTileHeight(i64),
    #[error("size N = {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("recursive matrix builder disagrees between wedge columns for ({alpha}, {beta})")]
    InconsistentRecursion { alpha: String, beta: String },
    #[error("more than one nested tiling found for ({alpha}, {beta})")]
    NestedNotUnique { alpha: String, beta: String },
    #[error("matrix is singular")]
    Singular,
    #[error("numeric domain error: {0}")]
    Domain(String),
    #[error("series did not converge after {0} terms")]
    NoConvergence(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
