use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("variable arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("product of two unknown-bearing polynomials")]
    NonLinearUnknowns,

    #[error("field of characteristic 2 is not supported here")]
    CharacteristicTwo,

    #[error("span dimension {found} does not match k+1 = {expected}")]
    SpanMismatch { expected: usize, found: usize },

    #[error("matrix is not on the variety: minor rows {rows:?} cols {cols:?} is {value}")]
    NotOnScheme {
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: String,
    },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("identity violated: {0}")]
    IdentityViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
