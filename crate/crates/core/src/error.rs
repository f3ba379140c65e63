use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax or semantic error at a byte offset of the parsed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),
    #[error("Taylor coefficients of the zero polynomial are undefined")]
    ZeroPolynomial,
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("no polynomial solution: every coefficient of the reduced equation is zero")]
    Unsolvable,
    #[error("invalid forcing term: {0}")]
    InvalidForcing(String),
    #[error("invalid expression term: {0}")]
    InvalidTerm(String),
    #[error("real form undefined: {0}")]
    RealFormUndefined(String),
    #[error("root {root}: {reason}")]
    RootCheck { root: String, reason: String },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("malformed document: {0}")]
    Document(String),
}
