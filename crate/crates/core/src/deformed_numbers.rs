//! Generalized fermionic basic numbers.
//!
//! For a deformation `q > 0` the fermionic basic number is
//!
//! ```text
//! [n] = q / (1 + q^2) * (q^-n - (-q)^n)
//! ```
//!
//! It satisfies `[0] = 0`, `[1] = 1` for every `q` and the recurrence
//! `[n+1] = q^-n - q [n]`. At `q = 1` it collapses to `0, 1, 0, 1, ...`, so
//! the basic factorial `[n]!` vanishes for every `n >= 2`.
//!
//! Evaluations that overflow the `f64` range return [`Error::Range`] instead
//! of silently producing infinities.

use crate::error::{Error, Result};

/// The deformation parameter `q > 0` together with `gamma = ln q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deformation {
    q: f64,
    gamma: f64,
}

impl Deformation {
    /// The undeformed point `q = 1`.
    pub const CLASSICAL: Deformation = Deformation { q: 1.0, gamma: 0.0 };

    pub fn from_q(q: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::InvalidDeformation { q });
        }
        Ok(Deformation { q, gamma: q.ln() })
    }

    pub fn from_gamma(gamma: f64) -> Result<Self> {
        let q = gamma.exp();
        if !gamma.is_finite() || !(q.is_finite() && q > 0.0) {
            return Err(Error::InvalidDeformation { q });
        }
        Ok(Deformation { q, gamma })
    }

    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn is_classical(&self) -> bool {
        self.q == 1.0
    }
}

fn range(what: &'static str, n: usize, d: Deformation) -> Error {
    Error::Range { what, n, q: d.q }
}

/// `q^k` for a signed integer power, failing on overflow.
pub(crate) fn checked_powi(q: f64, k: i64, what: &'static str, n: usize) -> Result<f64> {
    let v = if let Ok(k32) = i32::try_from(k) {
        q.powi(k32)
    } else {
        q.powf(k as f64)
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range { what, n, q })
    }
}

/// The fermionic basic number `[n]` from the rational formula.
///
/// `[0]` and `[1]` are returned exactly, without going through the formula.
pub fn basic_number(n: usize, d: Deformation) -> Result<f64> {
    match n {
        0 => return Ok(0.0),
        1 => return Ok(1.0),
        _ => {}
    }
    let q = d.q;
    let k = n as i64;
    let inv = checked_powi(q, -k, "basic number", n)?;
    let pow = checked_powi(q, k, "basic number", n)?;
    let signed = if n.is_multiple_of(2) { pow } else { -pow };
    let value = q / (1.0 + q * q) * (inv - signed);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(range("basic number", n, d))
    }
}

/// The fermionic basic number `[n]` from its hyperbolic form in `gamma = ln q`:
/// `-sinh(n gamma)/cosh(gamma)` for even `n`, `cosh(n gamma)/cosh(gamma)` for odd `n`.
pub fn basic_number_gamma(n: usize, d: Deformation) -> Result<f64> {
    match n {
        0 => return Ok(0.0),
        1 => return Ok(1.0),
        _ => {}
    }
    let arg = n as f64 * d.gamma;
    let value = if n.is_multiple_of(2) {
        // +0.0 keeps the q = 1 zeros unsigned
        0.0 - arg.sinh() / d.gamma.cosh()
    } else {
        arg.cosh() / d.gamma.cosh()
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(range("basic number (gamma form)", n, d))
    }
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn basic_factorial(n: usize, d: Deformation) -> Result<f64> {
    let mut acc = 1.0_f64;
    for k in 2..=n {
        acc *= basic_number(k, d)?;
        if !acc.is_finite() {
            return Err(range("basic factorial", k, d));
        }
        if acc == 0.0 {
            // every further factor is finite, so the product stays zero
            return Ok(0.0);
        }
    }
    Ok(acc)
}

/// `[0], [1], ..., [n_max]` at a fixed deformation, stamped with the
/// largest residual of the defining recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct BasicNumberSeq {
    deformation: Deformation,
    values: Vec<f64>,
    recurrence_residual: f64,
}

impl BasicNumberSeq {
    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Largest `|[n+1] - (q^-n - q [n])| / max(1, |[n+1]|)` over the stored range.
    pub fn recurrence_residual(&self) -> f64 {
        self.recurrence_residual
    }

    /// Per-index recurrence residual; entry `n` relates `[n]` to `[n-1]`
    /// and entry 0 is zero.
    pub fn recurrence_residuals(&self) -> Vec<f64> {
        let q = self.deformation.q;
        let mut out = Vec::with_capacity(self.values.len());
        out.push(0.0);
        for n in 0..self.values.len().saturating_sub(1) {
            out.push(recurrence_residual(
                q,
                n,
                self.values[n],
                self.values[n + 1],
            ));
        }
        out
    }
}

fn recurrence_residual(q: f64, n: usize, current: f64, next: f64) -> f64 {
    let predicted = q.powi(-(n as i32)) - q * current;
    (next - predicted).abs() / next.abs().max(1.0)
}

pub fn basic_number_sequence(n_max: usize, d: Deformation) -> Result<BasicNumberSeq> {
    let values = (0..=n_max)
        .map(|n| basic_number(n, d))
        .collect::<Result<Vec<_>>>()?;
    let recurrence_residual = values
        .windows(2)
        .enumerate()
        .map(|(n, w)| recurrence_residual(d.q, n, w[0], w[1]))
        .fold(0.0, f64::max);
    Ok(BasicNumberSeq {
        deformation: d,
        values,
        recurrence_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q_GRID: [f64; 8] = [0.1, 0.3, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0];

    fn dq(q: f64) -> Deformation {
        Deformation::from_q(q).unwrap()
    }

    #[test]
    fn low_indices_are_exact() {
        assert_eq!(basic_number(0, dq(2.0)).unwrap(), 0.0);
        assert_eq!(basic_number(1, dq(0.37)).unwrap(), 1.0);
        for &q in &Q_GRID {
            assert_eq!(basic_number(0, dq(q)).unwrap(), 0.0);
            assert_eq!(basic_number(1, dq(q)).unwrap(), 1.0);
        }
    }

    #[test]
    fn hand_values_at_q_two() {
        // (2/5)(1/4 - 4), (2/5)(1/8 + 8), (2/5)(1/16 - 16)
        let d = dq(2.0);
        assert!((basic_number(2, d).unwrap() - -1.5).abs() < 1e-15);
        assert!((basic_number(3, d).unwrap() - 3.25).abs() < 1e-15);
        assert!((basic_number(4, d).unwrap() - -6.375).abs() < 1e-15);
    }

    #[test]
    fn gamma_form_hand_values() {
        assert!((basic_number_gamma(4, dq(2.0)).unwrap() - -6.375).abs() < 1e-13);
        assert_eq!(basic_number_gamma(5, dq(1.0)).unwrap(), 1.0);
        assert!((basic_number_gamma(2, dq(0.5)).unwrap() - 1.5).abs() < 1e-14);
        assert!((basic_number_gamma(2, dq(2.0)).unwrap() - -1.5).abs() < 1e-14);
        assert!((basic_number_gamma(3, dq(2.0)).unwrap() - 3.25).abs() < 1e-14);
    }

    #[test]
    fn classical_point_alternates_exactly() {
        let d = Deformation::CLASSICAL;
        for n in 0..200_usize {
            let expected = if n.is_multiple_of(2) { 0.0 } else { 1.0 };
            assert_eq!(basic_number(n, d).unwrap(), expected, "n = {n}");
            assert_eq!(basic_number_gamma(n, d).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(basic_factorial(0, dq(3.3)).unwrap(), 1.0);
        assert_eq!(basic_factorial(1, dq(3.3)).unwrap(), 1.0);
        assert!((basic_factorial(3, dq(2.0)).unwrap() - -4.875).abs() < 1e-14);
        for n in 2..60 {
            assert_eq!(basic_factorial(n, Deformation::CLASSICAL).unwrap(), 0.0);
        }
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(
            basic_number_sequence(1, dq(7.0)).unwrap().values(),
            &[0.0, 1.0]
        );
        assert_eq!(
            basic_number_sequence(3, Deformation::CLASSICAL)
                .unwrap()
                .values(),
            &[0.0, 1.0, 0.0, 1.0]
        );
        let seq = basic_number_sequence(4, dq(2.0)).unwrap();
        let expected = [0.0, 1.0, -1.5, 3.25, -6.375];
        for (v, e) in seq.values().iter().zip(expected) {
            assert!((v - e).abs() < 1e-14);
        }
        assert!(seq.recurrence_residual() <= 1e-15);
        assert_eq!(seq.n_max(), 4);
        assert_eq!(seq.recurrence_residuals().len(), 5);
    }

    #[test]
    fn recurrence_and_gamma_form_on_grid() {
        for &q in &Q_GRID {
            let d = dq(q);
            let seq = basic_number_sequence(50, d).unwrap();
            assert!(
                seq.recurrence_residual() <= 1e-12,
                "q = {q}: {}",
                seq.recurrence_residual()
            );
            for n in 0..=50 {
                let a = basic_number(n, d).unwrap();
                let b = basic_number_gamma(n, d).unwrap();
                assert!(
                    (a - b).abs() <= 1e-12 * a.abs().max(1.0),
                    "q = {q}, n = {n}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn differs_from_integer_off_the_classical_point() {
        for &q in Q_GRID.iter().filter(|&&q| q != 1.0) {
            for n in 2..=50 {
                assert_ne!(
                    basic_number(n, dq(q)).unwrap(),
                    n as f64,
                    "q = {q}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn isolated_points_where_bracket_two_equals_two() {
        // [2] = 1/q - q, which equals 2 at q = sqrt(2) - 1
        let q = 2.0_f64.sqrt() - 1.0;
        assert!((basic_number(2, dq(q)).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn overflow_is_a_range_error() {
        assert!(matches!(
            basic_number(400, dq(0.1)),
            Err(Error::Range { n: 400, .. })
        ));
        assert!(matches!(
            basic_number_gamma(400, dq(0.1)),
            Err(Error::Range { .. })
        ));
        assert!(matches!(
            basic_factorial(40, dq(10.0)),
            Err(Error::Range { .. })
        ));
        assert!(basic_number_sequence(500, dq(5.0)).is_err());
    }

    #[test]
    fn invalid_deformations() {
        for q in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(Deformation::from_q(q).is_err());
        }
        assert!(Deformation::from_gamma(f64::NAN).is_err());
        assert!(Deformation::from_gamma(1000.0).is_err());
        assert!(Deformation::from_gamma(0.0).unwrap().is_classical());
    }

    proptest! {
        #[test]
        fn construction_round_trips(q in 1e-3f64..1e3) {
            let d = dq(q);
            prop_assert_eq!(d.gamma(), q.ln());
            let back = Deformation::from_gamma(d.gamma()).unwrap();
            prop_assert!((back.q() - q).abs() <= 4.0 * f64::EPSILON * q);
        }

        #[test]
        fn recurrence_holds_for_random_q(q in 0.1f64..10.0, n in 0usize..50) {
            let d = dq(q);
            let cur = basic_number(n, d).unwrap();
            let next = basic_number(n + 1, d).unwrap();
            let predicted = q.powi(-(n as i32)) - q * cur;
            prop_assert!((next - predicted).abs() <= 1e-12 * next.abs().max(1.0));
        }

        #[test]
        fn gamma_form_matches_rational_form(gamma in -2.3f64..2.3, n in 0usize..=50) {
            let d = Deformation::from_gamma(gamma).unwrap();
            let a = basic_number(n, d).unwrap();
            let b = basic_number_gamma(n, d).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }

        #[test]
        fn even_numbers_flip_sign_under_inversion(q in 0.2f64..5.0, half in 1usize..20) {
            let n = 2 * half;
            let a = basic_number(n, dq(q)).unwrap();
            let b = basic_number(n, dq(1.0 / q)).unwrap();
            prop_assert!((a + b).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }
}
