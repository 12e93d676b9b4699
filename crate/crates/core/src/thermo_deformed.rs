//! Statistical mechanics of the generalized q-deformed fermion oscillator.
//!
//! The deformed Hamiltonian `H = (b†b - bb†)/2` has levels
//! `E_n = ([n] - [n+1]) / 2` (units of `ħω`), unbounded below away from
//! `q = 1`, so the partition sum has no finite value there. The first-order
//! iterated distribution replaces the occupation probability by its `q -> 1`
//! value `P0_n`, which only depends on the parity of `n`:
//!
//! ```text
//! f_q = sum_n (1/2)([n] - [n+1]) P0_n
//! ```
//!
//! Split into even/odd indices and powers of `q` and `1/q`, this is a sum of
//! four geometric series, two of which always diverge termwise. Summing each
//! formally gives `f_q = q/(q^2 - 1) tanh(x/2) / 2`, which has a pole at
//! `q = 1` and a `q`-dependent low-temperature plateau.
//!
//! Under the weak exclusion principle `(b†)^n|0>` vanishes for `n > 1`, so
//! only `n = 0, 1` contribute and the classical `-tanh(x/2)/2` is recovered
//! for every `q`.

use serde::Serialize;

use crate::deformed_numbers::{basic_number, checked_powi, Deformation};
use crate::error::{Error, Result};
use crate::series::{sum_truncated, GeometricFamily, SeriesEvaluation, SummationMethod};
use crate::thermo_classical::{two_level_probs, ThermalPoint};

/// Distance from `q = 1` below which the closed form is refused.
pub const POLE_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeformedSpectrum {
    #[serde(skip)]
    pub deformation: Deformation,
    pub n_max: usize,
    /// `levels[n] = ([n] - [n+1]) / 2`, units of `ħω`.
    pub levels: Vec<f64>,
}

impl DeformedSpectrum {
    /// Boltzmann weights `exp(-x E_n)`.
    pub fn boltzmann_weights(&self, t: ThermalPoint) -> impl Iterator<Item = f64> + '_ {
        let x = t.x();
        self.levels.iter().map(move |e| (-x * e).exp())
    }
}

fn level(n: usize, d: Deformation) -> Result<f64> {
    let e = 0.5 * (basic_number(n, d)? - basic_number(n + 1, d)?);
    if e.is_finite() {
        Ok(e)
    } else {
        Err(Error::Range {
            what: "energy level",
            n,
            q: d.q(),
        })
    }
}

pub fn deformed_spectrum(n_max: usize, d: Deformation) -> Result<DeformedSpectrum> {
    let levels = (0..=n_max)
        .map(|n| level(n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeformedSpectrum {
        deformation: d,
        n_max,
        levels,
    })
}

/// Truncated `Z = sum_{n <= n_max} exp(-x E_n)` with divergence diagnostics.
pub fn deformed_partition(d: Deformation, t: ThermalPoint, n_max: usize) -> SeriesEvaluation {
    sum_truncated(n_max, |n| level(n, d).ok().map(|e| (-t.x() * e).exp()))
}

/// `P0_n = exp(-(x/2)(-1)^(n+1)) / (2 cosh(x/2))`.
pub fn zeroth_order_probability(n: usize, t: ThermalPoint) -> f64 {
    two_level_probs(t.x())[n % 2]
}

/// The `n`-th term of the first-order iterated distribution, written out in
/// powers of `q`:
/// `(q/(1+q^2)) {q^-n (1 - 1/q) - (-q)^n (1 + q)} P0_n / 2`.
pub fn naive_first_order_term(n: usize, d: Deformation, t: ThermalPoint) -> Result<f64> {
    let q = d.q();
    let k = n as i64;
    let inv = checked_powi(q, -k, "first-order term", n)?;
    let pow = checked_powi(q, k, "first-order term", n)?;
    let signed = if n.is_multiple_of(2) { pow } else { -pow };
    let bracket = inv * (1.0 - 1.0 / q) - signed * (1.0 + q);
    let term = 0.5 * q / (1.0 + q * q) * bracket * zeroth_order_probability(n, t);
    if term.is_finite() {
        Ok(term)
    } else {
        Err(Error::Range {
            what: "first-order term",
            n,
            q,
        })
    }
}

fn guard_pole(d: Deformation) -> Result<()> {
    if (d.q() - 1.0).abs() < POLE_GUARD {
        Err(Error::PoleAtQOne { q: d.q() })
    } else {
        Ok(())
    }
}

/// Re-sums the first-order series from its four geometric sub-series.
fn geometric_resummation(d: Deformation, t: ThermalPoint) -> f64 {
    let q = d.q();
    let [even_inv, even_dir, odd_inv, odd_dir] = GeometricFamily::ALL.map(|f| f.formal_sum(q));
    let down = 1.0 - 1.0 / q;
    let up = 1.0 + q;
    // on odd n, -(-q)^n = +q^n
    let even = down * even_inv - up * even_dir;
    let odd = down * odd_inv + up * odd_dir;
    let [p_even, p_odd] = two_level_probs(t.x());
    0.5 * q / (1.0 + q * q) * (even * p_even + odd * p_odd)
}

/// The first-order iterated distribution evaluated as a series.
///
/// `TruncatedTermwise` sums `n <= n_max` literally and diagnoses growth;
/// `GeometricClosedForm` ignores `n_max` and sums the sub-series formally.
pub fn naive_first_order_distribution_series(
    d: Deformation,
    t: ThermalPoint,
    n_max: usize,
    method: SummationMethod,
) -> Result<SeriesEvaluation> {
    match method {
        SummationMethod::TruncatedTermwise => Ok(sum_truncated(n_max, |n| {
            naive_first_order_term(n, d, t).ok()
        })),
        SummationMethod::GeometricClosedForm => {
            guard_pole(d)?;
            Ok(SeriesEvaluation::closed_form(geometric_resummation(d, t)))
        }
    }
}

/// `f_q = q/(q^2 - 1) tanh(x/2) / 2`.
pub fn naive_first_order_distribution_closed(d: Deformation, t: ThermalPoint) -> Result<f64> {
    guard_pole(d)?;
    let q = d.q();
    Ok(0.5 * q / (q * q - 1.0) * (t.x() / 2.0).tanh())
}

/// `U = N ħω f_q`.
pub fn naive_internal_energy(n_osc: u64, d: Deformation, t: ThermalPoint) -> Result<f64> {
    Ok(n_osc as f64 * t.hbar_omega() * naive_first_order_distribution_closed(d, t)?)
}

/// Zeroth-order probability under weak exclusion:
/// `P0_n = delta_{n0} P0_0 + delta_{n1} P0_1`.
pub fn weak_exclusion_probability(n: usize, t: ThermalPoint) -> f64 {
    match n {
        0 | 1 => zeroth_order_probability(n, t),
        _ => 0.0,
    }
}

/// Basic number as seen from the weakly excluded Fock space: `[n]` for
/// `n <= 1`, zero above, since `b†|1>` is annihilated there.
pub fn weak_exclusion_basic_number(n: usize, d: Deformation) -> f64 {
    match n {
        0 | 1 => basic_number(n, d).expect("[0] and [1] are exact"),
        _ => 0.0,
    }
}

/// First-order distribution with the weak exclusion principle imposed, at
/// an explicit deformation. The result does not depend on `q`.
pub fn corrected_distribution_at(d: Deformation, t: ThermalPoint) -> f64 {
    (0..=1)
        .map(|n| {
            let coeff =
                0.5 * (weak_exclusion_basic_number(n, d) - weak_exclusion_basic_number(n + 1, d));
            coeff * weak_exclusion_probability(n, t)
        })
        .sum()
}

pub fn corrected_distribution(t: ThermalPoint) -> f64 {
    corrected_distribution_at(Deformation::CLASSICAL, t)
}
