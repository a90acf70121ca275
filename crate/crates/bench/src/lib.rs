//! Fixtures shared by the benchmarks.

use shiftcf_core::{PolySeq, Rational, Recurrence};

/// A non-homogeneous recurrence with small rational cubic coefficients whose
/// factorization does not break down for any reasonable horizon.
pub fn cubic_recurrence() -> Recurrence {
    let q = |p: i64, d: i64| Rational::new(p, d).expect("nonzero denominator");
    Recurrence::new(
        PolySeq::from_coeffs(vec![q(-3, 2), q(1, 1), q(0, 1), q(-2, 3)]),
        PolySeq::from_coeffs(vec![q(5, 1), q(7, 4), q(1, 1)]),
        PolySeq::from_coeffs(vec![q(1, 1), q(-1, 5)]),
        q(2, 1),
        q(-1, 3),
    )
}
