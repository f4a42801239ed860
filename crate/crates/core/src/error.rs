use thiserror::Error;

/// Errors raised by the combinatorial and Fock-space layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree extrema are undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid node {0}")]
    InvalidNode(String),

    #[error("root vector {0} has odd norm")]
    OddNorm(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("positivity violation at row {row}, column {col}: {detail}")]
    PositivityViolation {
        row: String,
        col: String,
        detail: String,
    },

    #[error("operation requires level 2, got level {0}")]
    NotLevelTwo(usize),

    #[error("more than one tableau in the relative set for ({lambda}, {mu})")]
    NonUniqueTableau { lambda: String, mu: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid multipartition: {0}")]
    InvalidMultipartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
