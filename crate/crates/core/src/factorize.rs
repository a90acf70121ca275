//! Splitting `T^2 - b_n T - a_n` into `(T - c_n)(T - d_n)`.
//!
//! The split exists exactly when
//!
//! ```text
//! c_n + d_{n+1} = b_n
//! c_n d_n       = -a_n
//! ```
//!
//! for every `n >= 1`. Choosing a nonzero seed `d_1` and eliminating `c_n`
//! gives `d_{n+1} = b_n + a_n / d_n`, i.e. `d_{n+1}` is the finite continued
//! fraction `b_n + a_n/(b_{n-1} + a_{n-1}/(... + a_1/d_1))`. The recursion
//! breaks down if some `d_n` hits zero.

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::sequences::Recurrence;

/// A computed prefix of the factor sequences: `d_1..=d_{N+1}` and
/// `c_1..=c_N`, where `N` is the horizon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    d: Vec<Rational>,
    c: Vec<Rational>,
}

impl Factorization {
    /// Assembles a factorization from raw lists (`d` one longer than `c`)
    /// without checking the defining identities; see [`Self::first_violation`].
    pub fn from_parts(d: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if d.len() != c.len() + 1 {
            return Err(Error::MalformedFactorization(format!(
                "expected {} d values for {} c values, got {}",
                c.len() + 1,
                c.len(),
                d.len()
            )));
        }
        if d[0].is_zero() {
            return Err(Error::ZeroSeed);
        }
        Ok(Factorization { d, c })
    }

    pub fn d1(&self) -> &Rational {
        &self.d[0]
    }

    /// Number of recurrence steps covered.
    pub fn horizon(&self) -> usize {
        self.c.len()
    }

    /// `d_n` for `1 <= n <= horizon + 1`.
    pub fn d(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.d.get(i))
    }

    /// `c_n` for `1 <= n <= horizon`.
    pub fn c(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.c.get(i))
    }

    pub fn d_values(&self) -> &[Rational] {
        &self.d
    }

    pub fn c_values(&self) -> &[Rational] {
        &self.c
    }

    /// Keeps only the first `horizon` steps.
    pub fn truncate(&mut self, horizon: usize) {
        self.c.truncate(horizon);
        self.d.truncate(horizon + 1);
    }

    /// First `n` at which `c_n + d_{n+1} = b_n` or `c_n d_n = -a_n` fails,
    /// or `None` if both hold across the horizon.
    pub fn first_violation(&self, rec: &Recurrence) -> Result<Option<usize>> {
        for n in 1..=self.horizon() {
            let (c, d, d_next) = (&self.c[n - 1], &self.d[n - 1], &self.d[n]);
            if c + d_next != rec.b_at(n)? || c * d != -rec.a_at(n)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }
}

/// Runs `d_{n+1} = b_n + a_n / d_n`, `c_n = b_n - d_{n+1}` for `1 <= n <= horizon`.
///
/// Fails with [`Error::FactorizationBreakdown`] at the first `n <= horizon`
/// with `d_n = 0`; the error carries everything computed up to that point.
pub fn compute_cd(rec: &Recurrence, d1: &Rational, horizon: usize) -> Result<Factorization> {
    if d1.is_zero() {
        return Err(Error::ZeroSeed);
    }
    let mut d = Vec::with_capacity(horizon + 1);
    let mut c = Vec::with_capacity(horizon);
    d.push(d1.clone());
    for n in 1..=horizon {
        let d_n = &d[n - 1];
        if d_n.is_zero() {
            return Err(Error::FactorizationBreakdown {
                index: n,
                partial: Box::new(Factorization { d, c }),
            });
        }
        let b_n = rec.b_at(n)?;
        let d_next = &b_n + rec.a_at(n)?.checked_div(d_n)?;
        c.push(b_n - &d_next);
        d.push(d_next);
    }
    Ok(Factorization { d, c })
}

/// Seed that makes `y_0 - d_1 y_{-1}` vanish when possible: `y_0 / y_{-1}`
/// if both initial values are nonzero, otherwise 1.
pub fn default_d1(rec: &Recurrence) -> Rational {
    if rec.y_minus1.is_zero() || rec.y_0.is_zero() {
        Rational::one()
    } else {
        rec.y_0.checked_div(&rec.y_minus1).expect("nonzero y_{-1}")
    }
}

/// Checks, at step `n`, that the factored operator applied to
/// `y = (y_{n-2}, y_{n-1}, y_n)` agrees with the original one:
///
/// ```text
/// y_n - (d_{n+1} + c_n) y_{n-1} + c_n d_n y_{n-2}  ==  y_n - b_n y_{n-1} - a_n y_{n-2}
/// ```
///
/// For a valid factorization this holds for every `y`.
pub fn verify_split(
    rec: &Recurrence,
    fac: &Factorization,
    y: &[Rational; 3],
    n: usize,
) -> Result<bool> {
    let (Some(c_n), Some(d_n), Some(d_next)) = (fac.c(n), fac.d(n), fac.d(n + 1)) else {
        return Err(Error::IndexOutOfRange {
            index: n,
            horizon: fac.horizon(),
        });
    };
    let [y_nm2, y_nm1, y_n] = y;
    let factored = y_n - (d_next + c_n) * y_nm1 + c_n * d_n * y_nm2;
    let original = y_n - rec.b_at(n)? * y_nm1 - rec.a_at(n)? * y_nm2;
    Ok(factored == original)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::PolySeq;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn eight_rec() -> Recurrence {
        Recurrence::homogeneous(
            PolySeq::from_ints(&[0, 0, 0, 1, -2]),
            PolySeq::from_ints(&[1, 3, 3]),
            1.into(),
            1.into(),
        )
    }

    fn eighteen_rec() -> Recurrence {
        Recurrence::homogeneous(
            PolySeq::from_ints(&[0, 0, 0, 2, -4]),
            PolySeq::from_ints(&[2, 6, 5]),
            1.into(),
            2.into(),
        )
    }

    fn constant_rec() -> Recurrence {
        Recurrence::homogeneous(
            PolySeq::from_ints(&[-2]),
            PolySeq::from_ints(&[3]),
            1.into(),
            2.into(),
        )
    }

    #[test]
    fn eight_over_pi_squared_prefix() {
        let fac = compute_cd(&eight_rec(), &1.into(), 2).unwrap();
        assert_eq!(fac.d_values(), ints(&[1, 6, 15]));
        assert_eq!(fac.c_values(), ints(&[1, 4]));
        assert_eq!(fac.horizon(), 2);
    }

    #[test]
    fn eighteen_over_pi_squared_prefix() {
        let fac = compute_cd(&eighteen_rec(), &2.into(), 2).unwrap();
        assert_eq!(fac.d_values(), ints(&[2, 12, 30]));
        assert_eq!(fac.c_values(), ints(&[1, 4]));
    }

    #[test]
    fn constant_coefficients() {
        let fac = compute_cd(&constant_rec(), &2.into(), 3).unwrap();
        assert_eq!(fac.d_values(), ints(&[2, 2, 2, 2]));
        assert_eq!(fac.c_values(), ints(&[1, 1, 1]));
        assert_eq!(fac.first_violation(&constant_rec()).unwrap(), None);
    }

    #[test]
    fn zero_seed_rejected() {
        assert!(matches!(
            compute_cd(&eight_rec(), &0.into(), 3),
            Err(Error::ZeroSeed)
        ));
    }

    #[test]
    fn breakdown_reports_first_zero() {
        // b_n = 1, a_n = -1, d_1 = 1: d_2 = 1 - 1 = 0, so step 2 cannot divide.
        let rec = Recurrence::homogeneous(
            PolySeq::from_ints(&[-1]),
            PolySeq::from_ints(&[1]),
            1.into(),
            1.into(),
        );
        match compute_cd(&rec, &1.into(), 5) {
            Err(Error::FactorizationBreakdown { index, partial }) => {
                assert_eq!(index, 2);
                assert_eq!(partial.d_values(), ints(&[1, 0]));
                assert_eq!(partial.c_values(), ints(&[1]));
            }
            other => panic!("expected breakdown, got {other:?}"),
        }
        // A zero in the last stored slot is not a breakdown.
        assert!(compute_cd(&rec, &1.into(), 1).is_ok());
    }

    #[test]
    fn default_seed() {
        let rec = eight_rec();
        assert_eq!(default_d1(&rec), 1.into());
        assert_eq!(default_d1(&rec.with_initial(1.into(), 2.into())), 2.into());
        assert_eq!(default_d1(&rec.with_initial(0.into(), 1.into())), 1.into());
        assert_eq!(default_d1(&rec.with_initial(3.into(), 0.into())), 1.into());
    }

    #[test]
    fn split_examples() {
        let rec = eight_rec();
        let fac = compute_cd(&rec, &1.into(), 3).unwrap();
        assert!(verify_split(&rec, &fac, &[1.into(), 6.into(), 42.into()], 2).unwrap());

        let crec = constant_rec();
        let cfac = compute_cd(&crec, &2.into(), 3).unwrap();
        assert!(verify_split(&crec, &cfac, &[0.into(), 0.into(), 0.into()], 1).unwrap());

        let mut c = cfac.c_values().to_vec();
        c[0] += Rational::one();
        let broken = Factorization::from_parts(cfac.d_values().to_vec(), c).unwrap();
        let ones = [1.into(), 1.into(), 1.into()];
        assert!(!verify_split(&crec, &broken, &ones, 1).unwrap());
        assert_eq!(broken.first_violation(&crec).unwrap(), Some(1));
    }

    #[test]
    fn split_index_out_of_range() {
        let rec = eight_rec();
        let fac = compute_cd(&rec, &1.into(), 2).unwrap();
        let y = [1.into(), 1.into(), 1.into()];
        assert!(matches!(
            verify_split(&rec, &fac, &y, 0),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            verify_split(&rec, &fac, &y, 3),
            Err(Error::IndexOutOfRange {
                index: 3,
                horizon: 2
            })
        ));
    }

    #[test]
    fn from_parts_checks_shape() {
        assert!(Factorization::from_parts(ints(&[1, 2]), ints(&[1, 2])).is_err());
        assert!(matches!(
            Factorization::from_parts(ints(&[0]), vec![]),
            Err(Error::ZeroSeed)
        ));
        let mut fac = compute_cd(&eight_rec(), &1.into(), 4).unwrap();
        fac.truncate(2);
        assert_eq!(fac.d_values(), ints(&[1, 6, 15]));
    }
}
