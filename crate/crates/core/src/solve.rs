//! Solutions of `y_n - b_n y_{n-1} - a_n y_{n-2} = f_n`.
//!
//! [`iterate_direct`] runs the recurrence forward and is the ground truth.
//! The closed forms express the same values through a [`Factorization`]:
//! with `w_{n-2} = y_{n-1} - d_n y_{n-2}` the second-order problem splits
//! into two first-order ones,
//!
//! ```text
//! w_{n-1} = f_n + c_n w_{n-2},      w_{-1} = y_0 - d_1 y_{-1}
//! y_{n-1} = w_{n-2} + d_n y_{n-2}
//! ```
//!
//! and unrolling both gives
//!
//! ```text
//! y_n = Σ_{i=1}^{n+1} W_i Π_{j=i+1}^{n+1} d_j  +  y_{-1} Π_{j=1}^{n+1} d_j
//! W_i = Σ_{j=1}^{i-1} f_j Π_{k=j+1}^{i-1} c_k  +  w_{-1} Π_{k=1}^{i-1} c_k
//! ```
//!
//! Empty sums are 0 and empty products are 1.

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::factorize::{compute_cd, Factorization};
use crate::sequences::Recurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectIteration,
    NonHomogeneousClosedForm,
    HomogeneousClosedForm,
    ProductForm,
}

/// `y_{-1}, y_0, ..., y_N` together with how they were obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionTrace {
    values: Vec<Rational>,
    method: Method,
    factorization: Option<Factorization>,
    /// `w_{-1}, ..., w_{N-1}` for the non-homogeneous closed form.
    auxiliary: Option<Vec<Rational>>,
}

impl SolutionTrace {
    /// `y_n` for `-1 <= n <= horizon`.
    pub fn y(&self, n: i64) -> Option<&Rational> {
        usize::try_from(n + 1).ok().and_then(|i| self.values.get(i))
    }

    /// All values starting at `y_{-1}`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn horizon(&self) -> usize {
        self.values.len() - 2
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn factorization(&self) -> Option<&Factorization> {
        self.factorization.as_ref()
    }

    /// The intermediate `w` sequence, starting at `w_{-1}`.
    pub fn auxiliary(&self) -> Option<&[Rational]> {
        self.auxiliary.as_deref()
    }
}

pub fn iterate_direct(rec: &Recurrence, horizon: usize) -> Result<SolutionTrace> {
    let mut values = Vec::with_capacity(horizon + 2);
    values.push(rec.y_minus1.clone());
    values.push(rec.y_0.clone());
    for n in 1..=horizon {
        let y = rec.b_at(n)? * &values[n] + rec.a_at(n)? * &values[n - 1] + rec.f_at(n)?;
        values.push(y);
    }
    Ok(SolutionTrace {
        values,
        method: Method::DirectIteration,
        factorization: None,
        auxiliary: None,
    })
}

fn check_factorization(
    rec: &Recurrence,
    fac: &Factorization,
    horizon: usize,
) -> Result<Factorization> {
    if fac.horizon() < horizon {
        return Err(Error::HorizonMismatch {
            need: horizon,
            have: fac.horizon(),
        });
    }
    let mut fac = fac.clone();
    fac.truncate(horizon);
    if let Some(n) = fac.first_violation(rec)? {
        return Err(Error::MalformedFactorization(format!(
            "factor identities fail at n = {n} for this recurrence"
        )));
    }
    Ok(fac)
}

/// Evaluates the general closed form (with forcing term) from `fac`.
pub fn closed_form_nonhomogeneous(
    rec: &Recurrence,
    fac: &Factorization,
    horizon: usize,
) -> Result<SolutionTrace> {
    let fac = check_factorization(rec, fac, horizon)?;
    let c = fac.c_values();
    let d = fac.d_values();
    let f = (1..=horizon)
        .map(|n| rec.f_at(n))
        .collect::<Result<Vec<_>>>()?;
    let w0 = &rec.y_0 - fac.d1() * &rec.y_minus1;

    // w[i - 1] = W_i = w_{i-2}, for 1 <= i <= horizon + 1.
    let w: Vec<Rational> = (1..=horizon + 1)
        .map(|i| {
            let mut sum = Rational::zero();
            let mut c_prod = Rational::one();
            for j in (1..i).rev() {
                sum += &f[j - 1] * &c_prod;
                c_prod *= &c[j - 1];
            }
            sum + &w0 * c_prod
        })
        .collect();

    let mut values = vec![rec.y_minus1.clone(), rec.y_0.clone()];
    for n in 1..=horizon {
        let mut sum = Rational::zero();
        let mut d_prod = Rational::one();
        for i in (1..=n + 1).rev() {
            sum += &w[i - 1] * &d_prod;
            d_prod *= &d[i - 1];
        }
        values.push(sum + &rec.y_minus1 * d_prod);
    }
    Ok(SolutionTrace {
        values,
        method: Method::NonHomogeneousClosedForm,
        factorization: Some(fac),
        auxiliary: Some(w),
    })
}

/// The `f = 0` closed form:
/// `y_n = w_{-1} Σ_{i=1}^{n+1} Π_{j<i} c_j Π_{j=i+1}^{n+1} d_j + y_{-1} Π_{j=1}^{n+1} d_j`.
pub fn closed_form_homogeneous(
    rec: &Recurrence,
    fac: &Factorization,
    horizon: usize,
) -> Result<SolutionTrace> {
    if !rec.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let fac = check_factorization(rec, fac, horizon)?;
    let c = fac.c_values();
    let d = fac.d_values();
    let w0 = &rec.y_0 - fac.d1() * &rec.y_minus1;

    // c_prefix[i - 1] = c_1 ... c_{i-1}
    let mut c_prefix = Vec::with_capacity(horizon + 1);
    c_prefix.push(Rational::one());
    for c_j in c {
        let next = c_prefix.last().expect("non-empty") * c_j;
        c_prefix.push(next);
    }

    let mut values = vec![rec.y_minus1.clone(), rec.y_0.clone()];
    for n in 1..=horizon {
        let mut sum = Rational::zero();
        let mut d_prod = Rational::one();
        for i in (1..=n + 1).rev() {
            sum += &c_prefix[i - 1] * &d_prod;
            d_prod *= &d[i - 1];
        }
        values.push(&w0 * sum + &rec.y_minus1 * d_prod);
    }
    Ok(SolutionTrace {
        values,
        method: Method::HomogeneousClosedForm,
        factorization: Some(fac),
        auxiliary: None,
    })
}

/// `y_n = y_{-1} Π_{j=1}^{n+1} d_j` with the seed `d_1 = y_0 / y_{-1}`.
pub fn product_solution(rec: &Recurrence, horizon: usize) -> Result<SolutionTrace> {
    if !rec.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if rec.y_minus1.is_zero() {
        return Err(Error::ProductFormInapplicable("y_{-1} is zero"));
    }
    if rec.y_0.is_zero() {
        return Err(Error::ProductFormInapplicable(
            "y_0 is zero, so the seed d_1 would vanish",
        ));
    }
    let d1 = rec.y_0.checked_div(&rec.y_minus1)?;
    let fac = compute_cd(rec, &d1, horizon)?;
    let mut values = vec![rec.y_minus1.clone(), rec.y_0.clone()];
    let mut prod = d1;
    for d_j in &fac.d_values()[1..] {
        prod *= d_j;
        values.push(&rec.y_minus1 * &prod);
    }
    Ok(SolutionTrace {
        values,
        method: Method::ProductForm,
        factorization: Some(fac),
        auxiliary: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::PolySeq;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn constant(f: i64, y_minus1: i64, y_0: i64) -> Recurrence {
        Recurrence::new(
            PolySeq::from_ints(&[-2]),
            PolySeq::from_ints(&[3]),
            PolySeq::from_ints(&[f]),
            y_minus1.into(),
            y_0.into(),
        )
    }

    fn eight(y_minus1: i64, y_0: i64) -> Recurrence {
        Recurrence::homogeneous(
            PolySeq::from_ints(&[0, 0, 0, 1, -2]),
            PolySeq::from_ints(&[1, 3, 3]),
            y_minus1.into(),
            y_0.into(),
        )
    }

    #[test]
    fn direct_examples() {
        assert_eq!(
            iterate_direct(&constant(0, 1, 2), 3).unwrap().values(),
            ints(&[1, 2, 4, 8, 16])
        );
        assert_eq!(
            iterate_direct(&eight(1, 1), 2).unwrap().values(),
            ints(&[1, 1, 6, 90])
        );
        let zero = iterate_direct(&eight(0, 0), 10).unwrap();
        assert!(zero.values().iter().all(Rational::is_zero));
        assert_eq!(zero.horizon(), 10);
    }

    #[test]
    fn nonhomogeneous_examples() {
        let rec = constant(1, 0, 0);
        let fac = compute_cd(&rec, &1.into(), 2).unwrap();
        let trace = closed_form_nonhomogeneous(&rec, &fac, 2).unwrap();
        assert_eq!(trace.y(1), Some(&1.into()));
        assert_eq!(trace.y(2), Some(&4.into()));
        assert_eq!(trace.values(), iterate_direct(&rec, 2).unwrap().values());

        let rec = eight(1, 1);
        let fac = compute_cd(&rec, &1.into(), 2).unwrap();
        let trace = closed_form_nonhomogeneous(&rec, &fac, 2).unwrap();
        assert_eq!(trace.values(), ints(&[1, 1, 6, 90]));
        // w_{-1} = y_0 - d_1 y_{-1} = 0 and f = 0, so every w vanishes.
        assert!(trace.auxiliary().unwrap().iter().all(Rational::is_zero));

        let rec = constant(0, 0, 1);
        let fac = compute_cd(&rec, &1.into(), 1).unwrap();
        assert_eq!(
            closed_form_nonhomogeneous(&rec, &fac, 1).unwrap().y(1),
            Some(&3.into())
        );
    }

    #[test]
    fn auxiliary_matches_definition() {
        let rec = constant(1, 2, -1);
        let fac = compute_cd(&rec, &Rational::new(1, 3).unwrap(), 5).unwrap();
        let trace = closed_form_nonhomogeneous(&rec, &fac, 5).unwrap();
        let w = trace.auxiliary().unwrap();
        for n in 1..=6i64 {
            // w_{n-2} = y_{n-1} - d_n y_{n-2}
            let y = |k: i64| iterate_direct(&rec, 6).unwrap().y(k).unwrap().clone();
            let expected = y(n - 1) - fac.d(n as usize).unwrap() * y(n - 2);
            assert_eq!(w[(n - 1) as usize], expected);
        }
    }

    #[test]
    fn homogeneous_examples() {
        let rec = eight(0, 1);
        let fac = compute_cd(&rec, &1.into(), 1).unwrap();
        assert_eq!(
            closed_form_homogeneous(&rec, &fac, 1).unwrap().y(1),
            Some(&7.into())
        );

        let rec = constant(0, 1, 3);
        let fac = compute_cd(&rec, &3.into(), 6).unwrap();
        let trace = closed_form_homogeneous(&rec, &fac, 6).unwrap();
        let mut prod = Rational::one();
        for n in 0..=6 {
            prod *= fac.d(n + 1).unwrap();
            assert_eq!(trace.y(n as i64), Some(&prod));
        }

        let rec = eight(0, 0);
        let fac = compute_cd(&rec, &5.into(), 8).unwrap();
        assert!(closed_form_homogeneous(&rec, &fac, 8)
            .unwrap()
            .values()
            .iter()
            .all(Rational::is_zero));
    }

    #[test]
    fn homogeneous_rejects_forcing() {
        let rec = constant(1, 0, 0);
        let fac = compute_cd(&rec, &1.into(), 2).unwrap();
        assert!(matches!(
            closed_form_homogeneous(&rec, &fac, 2),
            Err(Error::NotHomogeneous)
        ));
        assert!(matches!(
            product_solution(&rec, 2),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn horizon_and_consistency_checks() {
        let rec = eight(1, 1);
        let fac = compute_cd(&rec, &1.into(), 2).unwrap();
        assert!(matches!(
            closed_form_nonhomogeneous(&rec, &fac, 3),
            Err(Error::HorizonMismatch { need: 3, have: 2 })
        ));
        let other = compute_cd(&constant(0, 1, 1), &1.into(), 2).unwrap();
        assert!(matches!(
            closed_form_nonhomogeneous(&rec, &other, 2),
            Err(Error::MalformedFactorization(_))
        ));
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            product_solution(&eight(1, 1), 3).unwrap().y(3),
            Some(&2520.into())
        );
        let eighteen = Recurrence::homogeneous(
            PolySeq::from_ints(&[0, 0, 0, 2, -4]),
            PolySeq::from_ints(&[2, 6, 5]),
            1.into(),
            2.into(),
        );
        assert_eq!(
            product_solution(&eighteen, 1).unwrap().y(1),
            Some(&24.into())
        );
        // d_1 = d_2 = d_3 = 1, agreeing with direct iteration 5, 5, 5.
        let trace = product_solution(&constant(0, 5, 5), 2).unwrap();
        assert_eq!(trace.y(2), Some(&5.into()));
        assert_eq!(
            trace.values(),
            iterate_direct(&constant(0, 5, 5), 2).unwrap().values()
        );
    }

    #[test]
    fn product_inapplicable() {
        assert!(matches!(
            product_solution(&eight(0, 1), 2),
            Err(Error::ProductFormInapplicable(_))
        ));
        assert!(matches!(
            product_solution(&eight(1, 0), 2),
            Err(Error::ProductFormInapplicable(_))
        ));
        // b_n = 1, a_n = -1 with d_1 = 1 breaks down at n = 2.
        let rec = Recurrence::homogeneous(
            PolySeq::from_ints(&[-1]),
            PolySeq::from_ints(&[1]),
            1.into(),
            1.into(),
        );
        assert!(matches!(
            product_solution(&rec, 4),
            Err(Error::FactorizationBreakdown { index: 2, .. })
        ));
    }
}
