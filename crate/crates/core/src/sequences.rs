//! Polynomial coefficient sequences and problem instances.
//!
//! Sequences are written in a small grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := coeff ('*' 'n' ('^' uint)?)? | 'n' ('^' uint)?
//! coeff := int | int '/' uint
//! ```
//!
//! Whitespace is insignificant. A sign may precede any term, so
//! `-2*n^4 + n^3` and `n^3 - 2*n^4` describe the same sequence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::error::{Error, ParseError, Result};

const MAX_DEGREE: usize = 1024;

/// `n ↦ Σ coeffs[k]·n^k`, defined for `n >= start`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolySeq {
    coeffs: Vec<Rational>,
    start: i64,
}

impl PolySeq {
    /// Builds a sequence from ascending coefficients, trimming trailing
    /// zeros. An empty list is the zero sequence.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        PolySeq { coeffs, start: 0 }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn constant(value: Rational) -> Self {
        Self::from_coeffs(vec![value])
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    /// Same polynomial, defined from `start` onwards.
    pub fn with_start(mut self, start: i64) -> Self {
        self.start = start;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn eval(&self, n: i64) -> Result<Rational> {
        if n < self.start {
            return Err(Error::DomainViolation {
                n,
                start: self.start,
            });
        }
        let x = Rational::from(n);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        Ok(acc)
    }

    /// Pointwise sum; the result is defined where both operands are.
    pub fn add(&self, other: &PolySeq) -> PolySeq {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let zero = Rational::zero();
                self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        Self::from_coeffs(coeffs).with_start(self.start.max(other.start))
    }

    pub fn scale(&self, factor: &Rational) -> PolySeq {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect()).with_start(self.start)
    }
}

pub fn parse_polyseq(text: &str) -> Result<PolySeq> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let coeffs = parser.expr()?;
    Ok(PolySeq::from_coeffs(coeffs))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> Error {
        ParseError::new(self.pos, message).into()
    }

    fn expr(&mut self) -> Result<Vec<Rational>> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            if !first {
                match self.peek() {
                    None => break,
                    Some(b'+') => self.pos += 1,
                    Some(b'-') => {
                        self.pos += 1;
                        negative = true;
                    }
                    Some(_) => return Err(self.error("expected '+' or '-'")),
                }
            }
            first = false;
            // Unary sign on the term itself.
            loop {
                if self.eat(b'-') {
                    negative = !negative;
                } else if !self.eat(b'+') {
                    break;
                }
            }
            let (coeff, power) = self.term()?;
            let coeff = if negative { -coeff } else { coeff };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(coeffs)
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        match self.peek() {
            Some(b'n') => Ok((Rational::one(), self.monomial()?)),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                if self.eat(b'*') {
                    if self.peek() != Some(b'n') {
                        return Err(self.error("expected 'n'"));
                    }
                    Ok((coeff, self.monomial()?))
                } else {
                    Ok((coeff, 0))
                }
            }
            Some(_) => Err(self.error("expected coefficient or 'n'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn monomial(&mut self) -> Result<usize> {
        // Caller has checked the current byte is 'n'.
        self.pos += 1;
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let exp = self.uint()?;
        match usize::try_from(&exp) {
            Ok(e) if e <= MAX_DEGREE => Ok(e),
            _ => Err(ParseError::new(at, format!("exponent exceeds {MAX_DEGREE}")).into()),
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let numer = self.uint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denom = self.uint()?;
            return Rational::new(numer, denom)
                .map_err(|_| ParseError::new(at, "zero denominator").into());
        }
        Ok(Rational::from(numer))
    }

    fn uint(&mut self) -> Result<dashu_int::UBig> {
        self.skip_ws();
        let begin = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if begin == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[begin..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }
}

/// Canonical text, highest power first, e.g. `-2*n^4 + n^3`.
impl fmt::Display for PolySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude == Rational::one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ if unit => f.write_str("n")?,
                _ => write!(f, "{magnitude}*n")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolySeq({self}; n >= {})", self.start)
    }
}

impl FromStr for PolySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polyseq(s)
    }
}

impl Serialize for PolySeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PolySeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_polyseq(&s).map_err(serde::de::Error::custom)
    }
}

/// The problem `y_n - b_n y_{n-1} - a_n y_{n-2} = f_n` for `n >= 1`, with
/// initial values `y_{-1}` and `y_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recurrence {
    pub a: PolySeq,
    pub b: PolySeq,
    pub f: PolySeq,
    pub y_minus1: Rational,
    pub y_0: Rational,
}

impl Recurrence {
    pub fn new(a: PolySeq, b: PolySeq, f: PolySeq, y_minus1: Rational, y_0: Rational) -> Self {
        Recurrence {
            a,
            b,
            f,
            y_minus1,
            y_0,
        }
    }

    pub fn homogeneous(a: PolySeq, b: PolySeq, y_minus1: Rational, y_0: Rational) -> Self {
        Self::new(a, b, PolySeq::zero(), y_minus1, y_0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.f.is_zero()
    }

    pub fn with_forcing(&self, f: PolySeq) -> Self {
        Recurrence { f, ..self.clone() }
    }

    pub fn with_initial(&self, y_minus1: Rational, y_0: Rational) -> Self {
        Recurrence {
            y_minus1,
            y_0,
            ..self.clone()
        }
    }

    pub fn a_at(&self, n: usize) -> Result<Rational> {
        self.a.eval(n as i64)
    }

    pub fn b_at(&self, n: usize) -> Result<Rational> {
        self.b.eval(n as i64)
    }

    pub fn f_at(&self, n: usize) -> Result<Rational> {
        self.f.eval(n as i64)
    }
}
