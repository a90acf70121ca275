//! Generalized continued fractions `b_0 + a_1/(b_1 + a_2/(b_2 + ...))`.
//!
//! The n-th convergent is `A_n / B_n` where both sequences obey
//! `X_n = b_n X_{n-1} + a_n X_{n-2}` with `A_{-1} = 1, A_0 = b_0` and
//! `B_{-1} = 0, B_0 = 1`. These are homogeneous instances of the
//! second-order problem in [`crate::sequences`], see [`cf_to_recurrence`].

use serde::{Deserialize, Serialize};

use crate::arith::{to_decimal, BigDecimal, Rational};
use crate::error::{Error, Result};
use crate::sequences::{PolySeq, Recurrence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfSpec {
    /// Partial denominators, read from `n = 0`.
    pub b: PolySeq,
    /// Partial numerators, read from `n = 1`.
    pub a: PolySeq,
}

impl CfSpec {
    pub fn new(b: PolySeq, a: PolySeq) -> Self {
        CfSpec { b, a }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Approximant {
    /// `A_n`
    Numerator,
    /// `B_n`
    Denominator,
}

/// Unreduced convergent numerators and denominators, indexed from `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergentPair {
    numerators: Vec<Rational>,
    denominators: Vec<Rational>,
}

impl ConvergentPair {
    pub fn horizon(&self) -> usize {
        self.numerators.len() - 2
    }

    /// `A_n` for `-1 <= n <= horizon`.
    pub fn numerator(&self, n: i64) -> Option<&Rational> {
        usize::try_from(n + 1)
            .ok()
            .and_then(|i| self.numerators.get(i))
    }

    /// `B_n` for `-1 <= n <= horizon`.
    pub fn denominator(&self, n: i64) -> Option<&Rational> {
        usize::try_from(n + 1)
            .ok()
            .and_then(|i| self.denominators.get(i))
    }

    /// `A_{-1}, A_0, ..., A_N`
    pub fn numerators(&self) -> &[Rational] {
        &self.numerators
    }

    /// `B_{-1}, B_0, ..., B_N`
    pub fn denominators(&self) -> &[Rational] {
        &self.denominators
    }

    /// `A_n / B_n` in lowest terms, for `0 <= n <= horizon`.
    pub fn ratio(&self, n: usize) -> Result<Rational> {
        let (Some(a), Some(b)) = (self.numerator(n as i64), self.denominator(n as i64)) else {
            return Err(Error::IndexOutOfRange {
                index: n,
                horizon: self.horizon(),
            });
        };
        a.checked_div(b)
            .map_err(|_| Error::IndeterminateConvergent { index: n })
    }

    /// First `n` where `A_n B_{n-1} - A_{n-1} B_n = (-1)^{n+1} a_1 ... a_n`
    /// fails, if any.
    pub fn first_determinant_violation(&self, cf: &CfSpec) -> Result<Option<usize>> {
        let mut a_prod = Rational::one();
        for n in 0..=self.horizon() {
            if n > 0 {
                a_prod *= cf.a.eval(n as i64)?;
            }
            let i = n + 1;
            let det = &self.numerators[i] * &self.denominators[i - 1]
                - &self.numerators[i - 1] * &self.denominators[i];
            let expected = if n % 2 == 0 { -&a_prod } else { a_prod.clone() };
            if det != expected {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }
}

pub fn convergents(cf: &CfSpec, horizon: usize) -> Result<ConvergentPair> {
    let b0 = cf.b.eval(0)?;
    let mut numerators = Vec::with_capacity(horizon + 2);
    let mut denominators = Vec::with_capacity(horizon + 2);
    numerators.extend([Rational::one(), b0]);
    denominators.extend([Rational::zero(), Rational::one()]);
    for n in 1..=horizon {
        let (b_n, a_n) = (cf.b.eval(n as i64)?, cf.a.eval(n as i64)?);
        let next_a = &b_n * &numerators[n] + &a_n * &numerators[n - 1];
        let next_b = &b_n * &denominators[n] + &a_n * &denominators[n - 1];
        numerators.push(next_a);
        denominators.push(next_b);
    }
    Ok(ConvergentPair {
        numerators,
        denominators,
    })
}

/// The `horizon`-th convergent rounded to `digits` significant digits.
pub fn value(cf: &CfSpec, horizon: usize, digits: u32) -> Result<BigDecimal> {
    let pair = convergents(cf, horizon)?;
    Ok(to_decimal(&pair.ratio(horizon)?, digits))
}

/// The homogeneous recurrence whose solution is `A_n` or `B_n`.
pub fn cf_to_recurrence(cf: &CfSpec, which: Approximant) -> Result<Recurrence> {
    let (y_minus1, y_0) = match which {
        Approximant::Numerator => (Rational::one(), cf.b.eval(0)?),
        Approximant::Denominator => (Rational::zero(), Rational::one()),
    };
    Ok(Recurrence::homogeneous(
        cf.a.clone(),
        cf.b.clone(),
        y_minus1,
        y_0,
    ))
}
