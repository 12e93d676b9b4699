use thiserror::Error;

/// Errors raised by the numerics in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("deformation parameter must be finite and positive, got q = {q}")]
    InvalidDeformation { q: f64 },

    #[error("dimensionless inverse temperature must be finite and positive, got x = {x}")]
    InvalidThermalPoint { x: f64 },

    #[error("non-finite intermediate while evaluating {what} at n = {n}, q = {q}")]
    Range {
        what: &'static str,
        n: usize,
        q: f64,
    },

    #[error("basic number [{n}] = {value} is negative; no real ladder representation exists")]
    NegativeBasicNumber { n: usize, value: f64 },

    #[error("Fock truncation must be at least 2, got {dim}")]
    InvalidDimension { dim: usize },

    #[error("closed-form first-order distribution has a pole at q = 1 (got q = {q})")]
    PoleAtQOne { q: f64 },
}

impl Error {
    /// Short machine-readable token used in tabular output cells.
    pub fn token(&self) -> &'static str {
        match self {
            Error::InvalidDeformation { .. } => "INVALID_Q",
            Error::InvalidThermalPoint { .. } => "INVALID_X",
            Error::Range { .. } => "RANGE_ERROR",
            Error::NegativeBasicNumber { .. } => "NEGATIVE_BASIC_NUMBER",
            Error::InvalidDimension { .. } => "INVALID_DIMENSION",
            Error::PoleAtQOne { .. } => "POLE_AT_Q_ONE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
