use thiserror::Error;

/// Errors raised by the algebra kernel and the distance pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("missing value for variable `{0}`")]
    MissingValue(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorOutOfRange { k: usize, rows: usize, cols: usize },

    #[error("polynomial is constant in `{0}`")]
    ConstantInVariable(String),

    #[error("degree {degree} in `{var}` is below the required {required}")]
    DegreeTooLow {
        var: String,
        degree: u32,
        required: u32,
    },

    #[error("inexact division")]
    InexactDivision,

    #[error("resource budget exhausted after {pairs} S-pairs")]
    Budget { pairs: usize },

    #[error("resource limit reached: {0}")]
    Limit(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
