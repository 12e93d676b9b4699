//! Statistical mechanics of generalized q-deformed fermion oscillators.
//!
//! - [`deformed_numbers`]: fermionic basic numbers `[n]`, factorials, recurrence.
//! - [`fock_algebra`]: truncated ladder-operator matrices and algebra residuals.
//! - [`thermo_classical`]: the undeformed two-level fermion oscillator.
//! - [`thermo_deformed`]: deformed spectrum, partition sum, first-order
//!   iterated distribution and its weak-exclusion correction.
//! - [`series`]: truncated and formal geometric summation.
//! - [`cli`]: the `qfermion` command-line front end.
//!
//! Energies are in units of `ħω` and `k = 1` throughout.

pub mod cli;
pub mod deformed_numbers;
pub mod error;
pub mod fock_algebra;
pub mod series;
pub mod thermo_classical;
pub mod thermo_deformed;

pub use deformed_numbers::{
    basic_factorial, basic_number, basic_number_gamma, basic_number_sequence, BasicNumberSeq,
    Deformation,
};
pub use error::{Error, Result};
pub use fock_algebra::{
    build_classical_rep, build_deformed_rep, check_classical_algebra, check_deformed_algebra,
    max_real_dim, weak_exclusion_norm, AlgebraResidual, LadderRep, Relation,
};
pub use series::{GeometricFamily, SeriesEvaluation, SummationMethod};
pub use thermo_classical::{
    classical_distribution, classical_partition, classical_report, ThermalPoint, ThermoReport,
};
pub use thermo_deformed::{
    corrected_distribution, corrected_distribution_at, deformed_partition, deformed_spectrum,
    naive_first_order_distribution_closed, naive_first_order_distribution_series,
    naive_internal_energy, zeroth_order_probability, DeformedSpectrum,
};
