use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_base::{Abs, Sign};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    pub fn new(numer: impl Into<IBig>, denom: impl Into<IBig>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(RBig::from_parts_signed(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<IBig>) -> Self {
        Rational(RBig::from(n.into()))
    }

    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn numer(&self) -> &IBig {
        self.0.numerator()
    }

    /// Always positive.
    pub fn denom(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_int()
    }

    pub fn is_negative(&self) -> bool {
        self.numer().sign() == Sign::Negative
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as usize))
    }

    /// Parses an exact decimal literal such as `0.125`, `-3`, `1e-12` or
    /// `2.5E3`.
    pub fn from_decimal_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        let (mantissa, exp) = match t.find(['e', 'E']) {
            Some(i) => {
                let exp: i64 = t[i + 1..]
                    .parse()
                    .map_err(|_| ParseError::new(offset + i + 1, "invalid exponent"))?;
                (&t[..i], exp)
            }
            None => (t, 0),
        };
        let (neg, body) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseError::new(offset, "expected digits").into());
        }
        if let Some(p) = int_part
            .chars()
            .chain(frac_part.chars())
            .position(|c| !c.is_ascii_digit())
        {
            return Err(ParseError::new(offset + p, "unexpected character in decimal").into());
        }
        let digits: IBig = format!("0{int_part}{frac_part}")
            .parse()
            .expect("validated digits");
        let digits = if neg { -digits } else { digits };
        let scale = exp - frac_part.len() as i64;
        let ten = IBig::from(10u8);
        Ok(if scale >= 0 {
            Rational::from_integer(digits * ten.pow(scale as usize))
        } else {
            Rational(RBig::from_parts(
                digits,
                UBig::from(10u8).pow(scale.unsigned_abs() as usize),
            ))
        })
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<IBig> for Rational {
    fn from(n: IBig) -> Self {
        Rational::from_integer(n)
    }
}

impl From<UBig> for Rational {
    fn from(n: UBig) -> Self {
        Rational(RBig::from(n))
    }
}

/// `p/q` when the denominator is not one, otherwise `p`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_int() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `-p`, `p/q` and `-p/q`, with optional surrounding whitespace.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.find('/') {
            Some(i) => {
                let numer = parse_int(&s[..i], 0, true)?;
                let denom = parse_int(&s[i + 1..], i + 1, false)?;
                Rational::new(numer, denom)
            }
            None => Ok(Rational::from_integer(parse_int(s, 0, true)?)),
        }
    }
}

fn parse_int(text: &str, base: usize, signed: bool) -> Result<IBig> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let sign_len = usize::from(signed && body.starts_with(['+', '-']));
    let digits = &body[sign_len..];
    let at = base + lead + sign_len;
    if digits.is_empty() {
        return Err(ParseError::new(at, "expected integer").into());
    }
    if let Some(p) = digits.find(|c: char| !c.is_ascii_digit()) {
        return Err(ParseError::new(at + p, "expected digit").into());
    }
    Ok(body.parse().expect("validated digits"))
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                $assign_trait::$assign_method(&mut self.0, &rhs.0);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                $assign_trait::$assign_method(&mut self.0, rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dashu_base::Gcd;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn field_examples() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("-2/3") * q("3/2"), q("-1"));
        assert_eq!(q("1/2") - q("1/2"), Rational::zero());
        assert!(matches!(
            q("7").checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(Rational::new(1, 0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonical_form() {
        let x = Rational::new(6, -4).unwrap();
        assert_eq!(x.numer(), &IBig::from(-3));
        assert_eq!(x.denom(), &UBig::from(2u8));
        let z = Rational::new(0, -7).unwrap();
        assert_eq!(z.to_string(), "0");
        assert!(z.denom().is_one());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q(" -12/8 ").to_string(), "-3/2");
        assert_eq!(q("+5").to_string(), "5");
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        let err = "3/x".parse::<Rational>().unwrap_err();
        match err {
            Error::Parse(p) => assert_eq!(p.position, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(
            Rational::from_decimal_str("1e-12").unwrap(),
            Rational::new(1, 10i64.pow(12)).unwrap()
        );
        assert_eq!(Rational::from_decimal_str("-2.50").unwrap(), q("-5/2"));
        assert_eq!(Rational::from_decimal_str("1.5E2").unwrap(), q("150"));
        assert_eq!(Rational::from_decimal_str(".25").unwrap(), q("1/4"));
        assert!(Rational::from_decimal_str("1e").is_err());
        assert!(Rational::from_decimal_str("abc").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    fn is_reduced(x: &Rational) -> bool {
        let (_, magnitude) = x.numer().clone().into_parts();
        !x.denom().is_zero() && magnitude.gcd(x.denom()).is_one()
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert!((&x + (-&x)).is_zero());
        }

        #[test]
        fn results_stay_reduced(x in arb_rational(), y in arb_rational()) {
            prop_assert!(is_reduced(&(&x + &y)));
            prop_assert!(is_reduced(&(&x - &y)));
            prop_assert!(is_reduced(&(&x * &y)));
            if let Ok(d) = x.checked_div(&y) {
                prop_assert!(is_reduced(&d));
            }
        }

        #[test]
        fn text_round_trip(x in arb_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
