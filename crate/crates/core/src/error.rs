use std::fmt;

use crate::factorize::Factorization;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A malformed sequence or literal, with the byte offset where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported precision: {digits} digits (supported range is 1..={max})")]
    PrecisionUnsupported { digits: u32, max: u32 },

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("sequence evaluated at n = {n}, below its domain start {start}")]
    DomainViolation { n: i64, start: i64 },

    #[error("factorization seed d_1 must be nonzero")]
    ZeroSeed,

    #[error("factorization breaks down: d_{index} = 0")]
    FactorizationBreakdown {
        index: usize,
        partial: Box<Factorization>,
    },

    #[error("index {index} outside 1..={horizon}")]
    IndexOutOfRange { index: usize, horizon: usize },

    #[error("factorization covers horizon {have}, but {need} steps were requested")]
    HorizonMismatch { need: usize, have: usize },

    #[error("malformed factorization: {0}")]
    MalformedFactorization(String),

    #[error("recurrence is not homogeneous (f is nonzero)")]
    NotHomogeneous,

    #[error("product solution inapplicable: {0}")]
    ProductFormInapplicable(&'static str),

    #[error("convergent denominator B_{index} is zero")]
    IndeterminateConvergent { index: usize },
}

impl Error {
    /// `true` for errors caused by the arithmetic of the problem itself
    /// (as opposed to malformed input).
    pub fn is_math(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero
                | Error::FactorizationBreakdown { .. }
                | Error::IndeterminateConvergent { .. }
                | Error::ProductFormInapplicable(_)
        )
    }
}
