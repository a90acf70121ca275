use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use dashu_base::{Abs, BitTest, DivRem, Sign};
use dashu_int::{IBig, UBig};

use super::Rational;
use crate::error::{Error, Result};

/// Precision used when no explicit digit count is requested.
pub const DEFAULT_PRECISION: u32 = 50;

/// Largest precision [`pi_squared_reference`] can serve from [`PI_LITERAL`].
pub const MAX_REFERENCE_DIGITS: u32 = 100;

/// π to 135 significant digits. Checked against an independent series
/// computation in the test suite.
pub const PI_LITERAL: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651328230664709384460955058";

/// A decimal number `significand * 10^exponent` carrying a fixed count of
/// significant digits.
///
/// Nonzero values always have exactly `precision` digits in the significand,
/// so equal values at equal precision compare equal structurally. Arithmetic
/// is carried out exactly and rounded (half to even) to the smaller of the
/// two operand precisions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigDecimal {
    significand: IBig,
    exponent: i64,
    precision: u32,
}

/// Rounds `x` to `digits` significant decimal digits, ties to even.
///
/// A `digits` of zero is treated as one.
pub fn to_decimal(x: &Rational, digits: u32) -> BigDecimal {
    let digits = digits.max(1);
    if x.is_zero() {
        return BigDecimal {
            significand: IBig::ZERO,
            exponent: 0,
            precision: digits,
        };
    }
    let (_, numer) = x.numer().clone().into_parts();
    let denom = x.denom().clone();

    let lower = pow10(digits as u64 - 1);
    let upper = &lower * UBig::from(10u8);

    // log10 estimate from bit lengths, then nudge until the scaled value sits
    // in [10^(digits-1), 10^digits).
    let log2 = numer.bit_len() as f64 - denom.bit_len() as f64;
    let mut exponent = (log2 * std::f64::consts::LOG10_2).floor() as i64 - (digits as i64 - 1);
    let (num, den) = loop {
        let (num, den) = scale(&numer, &denom, exponent);
        if num < &lower * &den {
            exponent -= 1;
        } else if num >= &upper * &den {
            exponent += 1;
        } else {
            break (num, den);
        }
    };

    let (mut q, r) = (&num).div_rem(&den);
    match (r * 2u8).cmp(&den) {
        Ordering::Greater => q += 1u8,
        Ordering::Equal if q.bit(0) => q += 1u8,
        _ => {}
    }
    if q == upper {
        q /= 10u8;
        exponent += 1;
    }
    let sign = if x.is_negative() {
        Sign::Negative
    } else {
        Sign::Positive
    };
    BigDecimal {
        significand: IBig::from_parts(sign, q),
        exponent,
        precision: digits,
    }
}

/// π² to `digits` significant digits, from the embedded π literal.
pub fn pi_squared_reference(digits: u32) -> Result<BigDecimal> {
    if digits == 0 || digits > MAX_REFERENCE_DIGITS {
        return Err(Error::PrecisionUnsupported {
            digits,
            max: MAX_REFERENCE_DIGITS,
        });
    }
    let pi = Rational::from_decimal_str(PI_LITERAL).expect("valid literal");
    Ok(to_decimal(&(&pi * &pi), digits))
}

fn pow10(k: u64) -> UBig {
    UBig::from(10u8).pow(k as usize)
}

/// `(numer / denom) * 10^-exponent` as a numerator/denominator pair.
fn scale(numer: &UBig, denom: &UBig, exponent: i64) -> (UBig, UBig) {
    if exponent >= 0 {
        (numer.clone(), denom * pow10(exponent as u64))
    } else {
        (numer * pow10(exponent.unsigned_abs()), denom.clone())
    }
}

impl BigDecimal {
    pub fn from_rational(x: &Rational, precision: u32) -> Self {
        to_decimal(x, precision)
    }

    /// Parses a decimal literal (`1e-12`, `0.5`, `-3`) and rounds it to
    /// `precision` digits.
    pub fn parse(s: &str, precision: u32) -> Result<Self> {
        Ok(to_decimal(&Rational::from_decimal_str(s)?, precision))
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.significand.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.significand.sign() == Sign::Negative
    }

    /// The exact value represented.
    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.significand * IBig::from(pow10(self.exponent as u64)))
        } else {
            Rational::new(
                self.significand.clone(),
                pow10(self.exponent.unsigned_abs()),
            )
            .expect("nonzero power of ten")
        }
    }

    pub fn abs(&self) -> Self {
        BigDecimal {
            significand: self.significand.clone().abs(),
            ..self.clone()
        }
    }

    /// Compares the represented values, ignoring precision.
    pub fn value_cmp(&self, other: &BigDecimal) -> Ordering {
        self.to_rational().cmp(&other.to_rational())
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        to_decimal(&self.to_rational(), precision)
    }

    fn combine(&self, other: &BigDecimal, value: Rational) -> Self {
        to_decimal(&value, self.precision.min(other.precision))
    }

    pub fn add(&self, other: &BigDecimal) -> Self {
        self.combine(other, self.to_rational() + other.to_rational())
    }

    pub fn sub(&self, other: &BigDecimal) -> Self {
        self.combine(other, self.to_rational() - other.to_rational())
    }

    pub fn mul(&self, other: &BigDecimal) -> Self {
        self.combine(other, self.to_rational() * other.to_rational())
    }

    pub fn checked_div(&self, other: &BigDecimal) -> Result<Self> {
        Ok(self.combine(other, self.to_rational().checked_div(&other.to_rational())?))
    }

    pub fn to_f64(&self) -> f64 {
        let s = format!("{}e{}", self.significand, self.exponent);
        s.parse().unwrap_or(f64::NAN)
    }
}

impl FromStr for BigDecimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BigDecimal::parse(s, DEFAULT_PRECISION)
    }
}

/// Positional notation for moderate magnitudes, scientific otherwise. All
/// `precision` significant digits are printed.
impl fmt::Display for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_negative() { "-" } else { "" };
        if self.is_zero() {
            return match self.precision {
                1 => f.write_str("0"),
                p => write!(f, "0.{}", "0".repeat(p as usize - 1)),
            };
        }
        let digits = self.significand.clone().abs().to_string();
        let len = digits.len() as i64;
        let adjusted = self.exponent + len - 1;
        if !(-7..21).contains(&adjusted) {
            let (head, tail) = digits.split_at(1);
            return if tail.is_empty() {
                write!(f, "{sign}{head}e{adjusted}")
            } else {
                write!(f, "{sign}{head}.{tail}e{adjusted}")
            };
        }
        if self.exponent >= 0 {
            write!(f, "{sign}{digits}{}", "0".repeat(self.exponent as usize))
        } else {
            let point = len + self.exponent;
            if point > 0 {
                let (int, frac) = digits.split_at(point as usize);
                write!(f, "{sign}{int}.{frac}")
            } else {
                write!(f, "{sign}0.{}{digits}", "0".repeat((-point) as usize))
            }
        }
    }
}

impl fmt::Debug for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (p={})", self.precision)
    }
}
