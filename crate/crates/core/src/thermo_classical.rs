//! Thermodynamics of the undeformed fermion oscillator with levels
//! `E_n = (n - 1/2) ħω`, `n = 0, 1`.
//!
//! Conventions: `k = 1`, `Z = sum exp(-β E_n)`, `S = -dF/dT`. Everything is
//! parameterized by `x = β ħω`.

use crate::error::{Error, Result};

/// A temperature point, `x = β ħω` with `k = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    x: f64,
    beta: f64,
    hbar_omega: f64,
}

impl ThermalPoint {
    /// Point with `ħω = 1`, so `β = x`.
    pub fn new(x: f64) -> Result<Self> {
        Self::from_beta(x, 1.0)
    }

    pub fn from_beta(beta: f64, hbar_omega: f64) -> Result<Self> {
        let x = beta * hbar_omega;
        if !(x.is_finite() && x > 0.0 && beta > 0.0 && hbar_omega > 0.0) {
            return Err(Error::InvalidThermalPoint { x });
        }
        Ok(ThermalPoint {
            x,
            beta,
            hbar_omega,
        })
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    #[inline]
    pub fn hbar_omega(&self) -> f64 {
        self.hbar_omega
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThermoReport {
    pub partition: f64,
    pub free_energy: f64,
    pub entropy: f64,
    /// `U/N`, in the energy unit of the thermal point.
    pub internal_energy_per_osc: f64,
    pub distribution: f64,
    pub occupation_probs: [f64; 2],
}

/// `ln cosh(y)` without overflow for large `|y|`.
pub(crate) fn ln_cosh(y: f64) -> f64 {
    let a = y.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// `Z = 2 cosh(x/2)`.
pub fn classical_partition(t: ThermalPoint) -> f64 {
    2.0 * (t.x / 2.0).cosh()
}

/// `P_0 = 1/(1 + e^-x)` and `P_1 = 1/(1 + e^x)`.
pub(crate) fn two_level_probs(x: f64) -> [f64; 2] {
    [1.0 / (1.0 + (-x).exp()), 1.0 / (1.0 + x.exp())]
}

/// `f = -1/2 + 1/(e^x + 1)`.
pub fn classical_distribution(t: ThermalPoint) -> f64 {
    -0.5 + 1.0 / (t.x.exp() + 1.0)
}

pub fn classical_report(t: ThermalPoint) -> ThermoReport {
    let half = t.x / 2.0;
    let ln_z = std::f64::consts::LN_2 + ln_cosh(half);
    let tanh = half.tanh();
    let free_energy = -ln_z / t.beta;
    let entropy = ln_z - t.beta * (t.hbar_omega / 2.0) * tanh;
    let internal_energy_per_osc = -(t.hbar_omega / 2.0) * tanh;
    ThermoReport {
        partition: classical_partition(t),
        free_energy,
        entropy,
        internal_energy_per_osc,
        distribution: classical_distribution(t),
        occupation_probs: two_level_probs(t.x),
    }
}
