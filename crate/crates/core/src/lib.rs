//! Exact solutions of second-order linear difference equations
//!
//! ```text
//! y_n - b_n y_{n-1} - a_n y_{n-2} = f_n,   n >= 1
//! ```
//!
//! with polynomial coefficient sequences, obtained by splitting the shift
//! operator `T^2 - b_n T - a_n` into the product `(T - c_n)(T - d_n)`.
//!
//! The factor sequences satisfy `c_n + d_{n+1} = b_n` and `c_n d_n = -a_n`,
//! which gives the recursion `d_{n+1} = b_n + a_n / d_n` for any nonzero seed
//! `d_1`. Once `c` and `d` are known the solution is a finite sum of products
//! (see [`solve`]).
//!
//! Convergents of a generalized continued fraction obey the same kind of
//! recurrence, so the same machinery evaluates and verifies continued
//! fraction identities ([`contfrac`], [`pi2`]).
//!
//! All arithmetic is exact ([`Rational`]); [`BigDecimal`] is used only to
//! compare against irrational targets.

pub mod arith;
pub mod contfrac;
mod error;
pub mod factorize;
pub mod pi2;
pub mod sequences;
pub mod solve;

pub use arith::{
    pi_squared_reference, to_decimal, BigDecimal, Rational, DEFAULT_PRECISION, MAX_REFERENCE_DIGITS,
};
pub use contfrac::{cf_to_recurrence, convergents, value, Approximant, CfSpec, ConvergentPair};
pub use error::{Error, ParseError, Result};
pub use factorize::{compute_cd, default_d1, verify_split, Factorization};
pub use pi2::{Pi2Case, Report};
pub use sequences::{parse_polyseq, PolySeq, Recurrence};
pub use solve::{
    closed_form_homogeneous, closed_form_nonhomogeneous, iterate_direct, product_solution, Method,
    SolutionTrace,
};
