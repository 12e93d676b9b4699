//! Evaluation of infinite sums: truncated partial sums with a growth-based
//! divergence test, and formal geometric sums.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SummationMethod {
    /// Literal partial sum of the first `n_max + 1` terms.
    TruncatedTermwise,
    /// Each geometric sub-series replaced by `first / (1 - ratio)`.
    GeometricClosedForm,
}

impl SummationMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SummationMethod::TruncatedTermwise => "truncated_termwise",
            SummationMethod::GeometricClosedForm => "geometric_closed_form",
        }
    }
}

/// A series value together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesEvaluation {
    pub value: f64,
    pub method: SummationMethod,
    pub n_max_used: Option<usize>,
    pub converged: bool,
    /// Magnitude of the last term, when the terms decay.
    pub residual_estimate: Option<f64>,
    /// First index at which term growth (or overflow) was detected.
    pub diverged_at: Option<usize>,
}

impl SeriesEvaluation {
    pub fn closed_form(value: f64) -> Self {
        SeriesEvaluation {
            value,
            method: SummationMethod::GeometricClosedForm,
            n_max_used: None,
            converged: true,
            residual_estimate: None,
            diverged_at: None,
        }
    }
}

/// Index of the first non-decreasing step in the final quarter of `mags`.
///
/// The window covers the last `max(2, ceil(len/4))` terms.
pub fn growth_in_final_quarter(mags: &[f64]) -> Option<usize> {
    let len = mags.len();
    if len < 2 {
        return None;
    }
    let window = len.div_ceil(4).max(2);
    let start = len - window;
    (start + 1..len).find(|&k| mags[k].partial_cmp(&mags[k - 1]) != Some(std::cmp::Ordering::Less))
}

/// Partial sum of `terms` over `0..=n_max` with divergence diagnostics.
///
/// A non-finite term stops the summation and is reported as divergence at
/// that index; the value is then the partial sum of the preceding terms.
pub fn sum_truncated<F>(n_max: usize, mut term: F) -> SeriesEvaluation
where
    F: FnMut(usize) -> Option<f64>,
{
    let mut sum = 0.0;
    let mut mags = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        match term(n) {
            Some(t) if t.is_finite() && (sum + t).is_finite() => {
                sum += t;
                mags.push(t.abs());
            }
            _ => {
                return SeriesEvaluation {
                    value: sum,
                    method: SummationMethod::TruncatedTermwise,
                    n_max_used: Some(n_max),
                    converged: false,
                    residual_estimate: None,
                    diverged_at: Some(n),
                };
            }
        }
    }
    let diverged_at = growth_in_final_quarter(&mags);
    SeriesEvaluation {
        value: sum,
        method: SummationMethod::TruncatedTermwise,
        n_max_used: Some(n_max),
        converged: diverged_at.is_none(),
        residual_estimate: diverged_at.is_none().then(|| mags[mags.len() - 1]),
        diverged_at,
    }
}

/// The four geometric sub-series obtained by splitting a sum over `n` into
/// even and odd indices and into powers of `q` and `q^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometricFamily {
    /// `sum_{n even} q^-n`
    EvenInverse,
    /// `sum_{n even} q^n`
    EvenDirect,
    /// `sum_{n odd} q^-n`
    OddInverse,
    /// `sum_{n odd} q^n`
    OddDirect,
}

impl GeometricFamily {
    pub const ALL: [GeometricFamily; 4] = [
        GeometricFamily::EvenInverse,
        GeometricFamily::EvenDirect,
        GeometricFamily::OddInverse,
        GeometricFamily::OddDirect,
    ];

    fn base(&self, q: f64) -> f64 {
        match self {
            GeometricFamily::EvenInverse | GeometricFamily::OddInverse => 1.0 / q,
            GeometricFamily::EvenDirect | GeometricFamily::OddDirect => q,
        }
    }

    fn first_index(&self) -> usize {
        match self {
            GeometricFamily::EvenInverse | GeometricFamily::EvenDirect => 0,
            GeometricFamily::OddInverse | GeometricFamily::OddDirect => 1,
        }
    }

    /// Whether the terms shrink, so the termwise sum converges.
    pub fn converges_termwise(&self, q: f64) -> bool {
        self.base(q).abs() < 1.0
    }

    /// `first / (1 - ratio)`; finite for every `q != 1`.
    pub fn formal_sum(&self, q: f64) -> f64 {
        let b = self.base(q);
        b.powi(self.first_index() as i32) / (1.0 - b * b)
    }

    /// Sum of the terms with index `n <= n_max`.
    pub fn partial_sum(&self, q: f64, n_max: usize) -> f64 {
        let b = self.base(q);
        let ratio = b * b;
        let mut term = b.powi(self.first_index() as i32);
        let mut sum = 0.0;
        let mut n = self.first_index();
        while n <= n_max {
            sum += term;
            term *= ratio;
            n += 2;
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decaying_sequence_converges() {
        let e = sum_truncated(40, |n| Some(0.5f64.powi(n as i32)));
        assert!(e.converged);
        assert_eq!(e.diverged_at, None);
        assert_eq!(e.residual_estimate, Some(0.5f64.powi(40)));
        assert!((e.value - 2.0).abs() < 1e-11);
        assert_eq!(e.method, SummationMethod::TruncatedTermwise);
        assert_eq!(e.n_max_used, Some(40));
    }

    #[test]
    fn growth_anywhere_in_final_quarter_fires() {
        assert_eq!(
            growth_in_final_quarter(&[5.0, 4.0, 3.0, 2.0, 1.0, 0.5, 0.4, 0.6]),
            Some(7)
        );
        assert_eq!(
            growth_in_final_quarter(&[9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.0, 0.9, 1.5, 0.01]),
            Some(10)
        );
        assert_eq!(growth_in_final_quarter(&[1.0, 1.0]), Some(1));
        assert_eq!(growth_in_final_quarter(&[2.0, 1.0]), None);
        assert_eq!(growth_in_final_quarter(&[1.0]), None);
        // growth before the window is ignored
        assert_eq!(
            growth_in_final_quarter(&[1.0, 9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0]),
            None
        );
    }

    #[test]
    fn overflow_is_divergence() {
        let e = sum_truncated(10, |n| Some(if n == 4 { f64::INFINITY } else { 1.0 }));
        assert!(!e.converged);
        assert_eq!(e.diverged_at, Some(4));
        assert_eq!(e.value, 4.0);
        let e = sum_truncated(10, |n| if n == 2 { None } else { Some(1.0) });
        assert_eq!(e.diverged_at, Some(2));
    }

    #[test]
    fn closed_form_metadata() {
        let e = SeriesEvaluation::closed_form(1.5);
        assert!(e.converged);
        assert_eq!(e.n_max_used, None);
        assert_eq!(e.diverged_at, None);
    }

    #[test]
    fn formal_sums_match_hand_algebra() {
        let q: f64 = 2.0;
        let q2 = q * q;
        let expected = [
            q2 / (q2 - 1.0),
            1.0 / (1.0 - q2),
            q / (q2 - 1.0),
            q / (1.0 - q2),
        ];
        for (fam, e) in GeometricFamily::ALL.iter().zip(expected) {
            assert!((fam.formal_sum(q) - e).abs() < 1e-15, "{fam:?}");
        }
    }

    #[test]
    fn convergent_families_match_their_partial_sums() {
        for q in [0.3, 0.5, 0.9, 1.1, 2.0, 3.0, 5.0] {
            for fam in GeometricFamily::ALL {
                if fam.converges_termwise(q) {
                    let a = fam.partial_sum(q, 2000);
                    let b = fam.formal_sum(q);
                    assert!(
                        (a - b).abs() <= 1e-12 * b.abs(),
                        "q = {q}, {fam:?}: {a} vs {b}"
                    );
                }
            }
        }
    }
}
