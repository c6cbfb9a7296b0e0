use thiserror::Error;

/// Syntax or name-resolution failure while reading an expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {column}")]
pub struct ParseError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError { column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} values, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in rings with {left} and {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("module elements of rank {left} and {right} cannot be combined")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("elimination must leave at least one variable")]
    NothingLeft,
    #[error("expected a form of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("form is not closed")]
    NotClosed,
    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("invalid parametrization: {0}")]
    InvalidParametrization(String),
    #[error("germ is not flagged as {0}")]
    MissingFlag(&'static str),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
