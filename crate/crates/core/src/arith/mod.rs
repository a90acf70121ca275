//! Exact rational scalars and a fixed-precision decimal layer.

mod decimal;
mod rational;

pub use decimal::{
    pi_squared_reference, to_decimal, BigDecimal, DEFAULT_PRECISION, MAX_REFERENCE_DIGITS,
    PI_LITERAL,
};
pub use rational::Rational;
