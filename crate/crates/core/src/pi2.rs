//! Two continued fractions for `8/π²` and `18/π²` and their verification.
//!
//! | case      | `b_n`          | `a_n`               | `d_n`       | `c_n` | `A_n`               |
//! |-----------|----------------|---------------------|-------------|-------|---------------------|
//! | `8/π²`    | `3n(n+1) + 1`  | `-(2n-1) n³`        | `n(2n-1)`   | `n²`  | `(2n+2)! / 2^(n+1)` |
//! | `18/π²`   | `n(5n+6) + 2`  | `-4n⁴ + 2n³`        | `2n(2n-1)`  | `n²`  | `(2n+2)!`           |
//!
//! In both cases `B_n = A_n Σ_{i=1}^{n+1} t_i`, so `A_n / B_n` is the
//! reciprocal of a partial sum of an Apéry-like series:
//! `t_i = i!² 2^i / (i² (2i)!)` summing to `π²/8`, and
//! `t_i = (i-1)!² / (2i)!` summing to `π²/18`. Those two series identities
//! are taken as given; everything else is checked exactly.

use std::fmt;

use dashu_int::UBig;
use serde::{Deserialize, Serialize};

use crate::arith::{pi_squared_reference, to_decimal, BigDecimal, Rational, DEFAULT_PRECISION};
use crate::contfrac::{cf_to_recurrence, convergents, Approximant, CfSpec};
use crate::error::{Error, Result};
use crate::factorize::compute_cd;
use crate::sequences::PolySeq;
use crate::solve::{closed_form_homogeneous, product_solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pi2Case {
    EightOverPiSq,
    EighteenOverPiSq,
}

/// `0!, 1!, ..., m!`, built once per report run.
#[derive(Clone, Debug)]
pub struct Factorials(Vec<UBig>);

impl Factorials {
    pub fn up_to(m: usize) -> Self {
        let mut table = Vec::with_capacity(m + 1);
        table.push(UBig::ONE);
        for k in 1..=m {
            let next = &table[k - 1] * UBig::from(k);
            table.push(next);
        }
        Factorials(table)
    }

    /// Panics if `k` exceeds the table size.
    pub fn get(&self, k: usize) -> &UBig {
        &self.0[k]
    }

    fn rational(&self, k: usize) -> Rational {
        Rational::from(self.0[k].clone())
    }
}

impl Pi2Case {
    pub const ALL: [Pi2Case; 2] = [Pi2Case::EightOverPiSq, Pi2Case::EighteenOverPiSq];

    /// Looks a case up by its numerator, 8 or 18.
    pub fn from_target(target: u32) -> Option<Self> {
        match target {
            8 => Some(Pi2Case::EightOverPiSq),
            18 => Some(Pi2Case::EighteenOverPiSq),
            _ => None,
        }
    }

    pub fn target_times_pi2(self) -> u32 {
        match self {
            Pi2Case::EightOverPiSq => 8,
            Pi2Case::EighteenOverPiSq => 18,
        }
    }

    pub fn cf(self) -> CfSpec {
        match self {
            Pi2Case::EightOverPiSq => CfSpec::new(
                PolySeq::from_ints(&[1, 3, 3]),
                PolySeq::from_ints(&[0, 0, 0, 1, -2]),
            ),
            Pi2Case::EighteenOverPiSq => CfSpec::new(
                PolySeq::from_ints(&[2, 6, 5]),
                PolySeq::from_ints(&[0, 0, 0, 2, -4]),
            ),
        }
    }

    pub fn d_closed(self, n: usize) -> Rational {
        let n = n as i64;
        match self {
            Pi2Case::EightOverPiSq => Rational::from(n * (2 * n - 1)),
            Pi2Case::EighteenOverPiSq => Rational::from(2 * n * (2 * n - 1)),
        }
    }

    pub fn c_closed(self, n: usize) -> Rational {
        Rational::from((n * n) as i64)
    }

    /// Closed form of `A_n`; needs `(2n+2)!` in `fact`.
    pub fn a_closed(self, n: usize, fact: &Factorials) -> Rational {
        let f = fact.rational(2 * n + 2);
        match self {
            Pi2Case::EightOverPiSq => f
                .checked_div(&Rational::from(2).pow(n as u32 + 1))
                .expect("nonzero power of two"),
            Pi2Case::EighteenOverPiSq => f,
        }
    }

    /// `i`-th term (`i >= 1`) of the series summing to `π² / target`; needs
    /// `(2i)!` in `fact`.
    pub fn series_term(self, i: usize, fact: &Factorials) -> Rational {
        assert!(i >= 1, "series starts at i = 1");
        let num = match self {
            Pi2Case::EightOverPiSq => fact.rational(i).pow(2) * Rational::from(2).pow(i as u32),
            Pi2Case::EighteenOverPiSq => fact.rational(i - 1).pow(2),
        };
        let den = match self {
            Pi2Case::EightOverPiSq => Rational::from((i * i) as i64) * fact.rational(2 * i),
            Pi2Case::EighteenOverPiSq => fact.rational(2 * i),
        };
        num.checked_div(&den).expect("positive factorials")
    }

    /// `target / π²` to `digits` significant digits.
    pub fn target_decimal(self, digits: u32) -> Result<BigDecimal> {
        let pi2 = pi_squared_reference(digits)?;
        to_decimal(&Rational::from(self.target_times_pi2() as i64), digits).checked_div(&pi2)
    }
}

impl fmt::Display for Pi2Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/pi^2", self.target_times_pi2())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Factorization,
    NumeratorClosedForm,
    DenominatorSeries,
    SolverAgreement,
    Limit,
}

/// Outcome of one verification; serialized as the JSON report object.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub check: Check,
    #[serde(rename = "N")]
    pub horizon: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch_index: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rate_estimate: Option<String>,
}

impl Report {
    fn exact(
        case: Pi2Case,
        check: Check,
        horizon: usize,
        first_mismatch_index: Option<i64>,
    ) -> Self {
        Report {
            case: case.to_string(),
            check,
            horizon,
            pass: first_mismatch_index.is_none(),
            first_mismatch_index,
            residual_decimal: None,
            rate_estimate: None,
        }
    }
}

/// Runs the factor recursion from `d_1 = d_closed(1)` and compares against
/// the closed forms of `d_n` (up to `N+1`) and `c_n` (up to `N`).
pub fn check_factorization_closed_form(case: Pi2Case, horizon: usize) -> Result<Report> {
    check_factorization_seeded(case, horizon, &case.d_closed(1))
}

pub fn check_factorization_seeded(case: Pi2Case, horizon: usize, d1: &Rational) -> Result<Report> {
    let rec = cf_to_recurrence(&case.cf(), Approximant::Numerator)?;
    let fac = compute_cd(&rec, d1, horizon)?;
    let mismatch = (1..=horizon + 1).find(|&n| {
        fac.d(n) != Some(&case.d_closed(n)) || (n <= horizon && fac.c(n) != Some(&case.c_closed(n)))
    });
    Ok(Report::exact(
        case,
        Check::Factorization,
        horizon,
        mismatch.map(|n| n as i64),
    ))
}

/// Compares convergent numerators `A_0..=A_N` with their closed form. A
/// mismatch here would mean the stated closed form is wrong, not the
/// recurrence.
pub fn check_a_closed_form(case: Pi2Case, horizon: usize) -> Result<Report> {
    let pair = convergents(&case.cf(), horizon)?;
    let fact = Factorials::up_to(2 * horizon + 2);
    let mismatch =
        (0..=horizon).find(|&n| pair.numerator(n as i64) != Some(&case.a_closed(n, &fact)));
    Ok(Report::exact(
        case,
        Check::NumeratorClosedForm,
        horizon,
        mismatch.map(|n| n as i64),
    ))
}

/// Compares `B_n` with `A_n Σ_{i=1}^{n+1} t_i` for `0 <= n <= N`.
pub fn check_b_series(case: Pi2Case, horizon: usize) -> Result<Report> {
    let pair = convergents(&case.cf(), horizon)?;
    let fact = Factorials::up_to(2 * horizon + 2);
    let mut partial = Rational::zero();
    let mut mismatch = None;
    for n in 0..=horizon {
        partial += case.series_term(n + 1, &fact);
        if pair.denominator(n as i64) != Some(&(case.a_closed(n, &fact) * &partial)) {
            mismatch = Some(n as i64);
            break;
        }
    }
    Ok(Report::exact(
        case,
        Check::DenominatorSeries,
        horizon,
        mismatch,
    ))
}

/// Three independent routes to `A_n` and `B_n`: the convergent recurrence,
/// the factorized solver (product form for `A`, homogeneous closed form for
/// `B`), and the factorial closed forms.
pub fn check_solver_agreement(case: Pi2Case, horizon: usize) -> Result<Report> {
    let cf = case.cf();
    let pair = convergents(&cf, horizon)?;
    let fact = Factorials::up_to(2 * horizon + 2);

    let a_rec = cf_to_recurrence(&cf, Approximant::Numerator)?;
    let a_trace = product_solution(&a_rec, horizon)?;
    let b_rec = cf_to_recurrence(&cf, Approximant::Denominator)?;
    let fac = compute_cd(&b_rec, &case.d_closed(1), horizon)?;
    let b_trace = closed_form_homogeneous(&b_rec, &fac, horizon)?;

    let mut partial = Rational::zero();
    let mut mismatch = None;
    for n in 0..=horizon {
        partial += case.series_term(n + 1, &fact);
        let a_closed = case.a_closed(n, &fact);
        let b_closed = &a_closed * &partial;
        let i = n as i64;
        let ok = pair.numerator(i) == a_trace.y(i)
            && a_trace.y(i) == Some(&a_closed)
            && pair.denominator(i) == b_trace.y(i)
            && b_trace.y(i) == Some(&b_closed);
        if !ok {
            mismatch = Some(i);
            break;
        }
    }
    Ok(Report::exact(
        case,
        Check::SolverAgreement,
        horizon,
        mismatch,
    ))
}

/// `|A_n/B_n - target/π²|` for `0 <= n <= N`, at [`DEFAULT_PRECISION`] digits.
pub fn residuals(case: Pi2Case, horizon: usize) -> Result<Vec<BigDecimal>> {
    let pair = convergents(&case.cf(), horizon)?;
    let target = case.target_decimal(DEFAULT_PRECISION)?;
    (0..=horizon)
        .map(|n| {
            let approx = to_decimal(&pair.ratio(n)?, DEFAULT_PRECISION);
            Ok(approx.sub(&target).abs())
        })
        .collect()
}

/// Passes iff the `N`-th convergent is within `tol` of `target/π²`. Also
/// reports the ratio of the last two residuals as a convergence rate.
pub fn check_limit(case: Pi2Case, horizon: usize, tol: &BigDecimal) -> Result<Report> {
    let res = residuals(case, horizon)?;
    let last = res.last().expect("at least one residual");
    let rate = match res.len() {
        n if n >= 2 && !res[n - 2].is_zero() => {
            Some(last.checked_div(&res[n - 2])?.with_precision(6).to_string())
        }
        _ => None,
    };
    Ok(Report {
        case: case.to_string(),
        check: Check::Limit,
        horizon,
        pass: last.value_cmp(tol).is_lt(),
        first_mismatch_index: None,
        residual_decimal: Some(last.with_precision(6).to_string()),
        rate_estimate: rate,
    })
}

/// All exact checks followed by the limit check.
pub fn verify_all(case: Pi2Case, horizon: usize, tol: &BigDecimal) -> Result<Vec<Report>> {
    if horizon == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            horizon: 0,
        });
    }
    Ok(vec![
        check_factorization_closed_form(case, horizon)?,
        check_a_closed_form(case, horizon)?,
        check_b_series(case, horizon)?,
        check_solver_agreement(case, horizon)?,
        check_limit(case, horizon, tol)?,
    ])
}
