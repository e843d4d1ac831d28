use std::fmt;

use thiserror::Error;

/// Location-tagged failure from the expression or file parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("a word must contain at least one prime")]
    EmptyWord,
    #[error("two adjacent P-primes at positions {0} and {1}")]
    AdjacentPrimes(usize, usize),
    #[error("the generator list is empty")]
    NoGenerators,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("`{0}` is not a valid generator name")]
    InvalidGeneratorName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("value refers to generator #{index} but the context has {available} generators")]
    ContextMismatch { index: usize, available: usize },
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("weight lambda must be nonzero for this presentation")]
    ZeroWeight,
    #[error("invalid bound: {0}")]
    InvalidBound(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
    #[error("coefficient {0} is not representable in the chosen scalar type")]
    Coefficient(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
