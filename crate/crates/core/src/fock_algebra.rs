//! Truncated matrix representations of the fermionic ladder operators.
//!
//! The deformed operators act on `|0>, ..., |D-1>` as `b|n> = sqrt([n]) |n-1>`
//! and `b†|n> = sqrt([n+1]) |n+1>`. They obey
//!
//! ```text
//! b b† + q b† b = q^-N,   [N, b] = -b,   [N, b†] = b†
//! ```
//!
//! with `b† b = [N]` and `b b† = [N+1]`. The top truncated level cannot carry
//! `[D]`, so the relations are checked on `n <= D-2` only.
//!
//! A real representation needs `[n] >= 0` on the represented range. Since
//! `[2] = 1/q - q`, that only holds beyond `D = 2` when `q <= 1`.

use nalgebra::DMatrix;

use crate::deformed_numbers::{basic_factorial, basic_number, Deformation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LadderRep {
    deformation: Deformation,
    b: DMatrix<f64>,
    b_dag: DMatrix<f64>,
    num: DMatrix<f64>,
}

impl LadderRep {
    pub fn dim(&self) -> usize {
        self.b.nrows()
    }

    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    /// Annihilation operator.
    pub fn b(&self) -> &DMatrix<f64> {
        &self.b
    }

    /// Creation operator, the transpose of [`LadderRep::b`].
    pub fn b_dag(&self) -> &DMatrix<f64> {
        &self.b_dag
    }

    /// Number operator `diag(0, 1, ..., D-1)`.
    pub fn num(&self) -> &DMatrix<f64> {
        &self.num
    }

    /// `H = (b† b - b b†) / 2` in units of `ħω`.
    pub fn hamiltonian(&self) -> DMatrix<f64> {
        (&self.b_dag * &self.b - &self.b * &self.b_dag) * 0.5
    }

    /// Eigenvalues of the number operator, ascending.
    pub fn number_eigenvalues(&self) -> Vec<f64> {
        sorted_eigenvalues(&self.num)
    }

    /// Squared norm of `(b†)^n |0>` inside the truncated space.
    pub fn raised_vacuum_norm_sq(&self, n: usize) -> f64 {
        let mut v = DMatrix::<f64>::zeros(self.dim(), 1);
        v[(0, 0)] = 1.0;
        for _ in 0..n {
            v = &self.b_dag * v;
        }
        v.norm_squared()
    }
}

fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Builds the deformed representation on a `dim`-level Fock space.
pub fn build_deformed_rep(dim: usize, d: Deformation) -> Result<LadderRep> {
    if dim < 2 {
        return Err(Error::InvalidDimension { dim });
    }
    let mut b = DMatrix::<f64>::zeros(dim, dim);
    for n in 1..dim {
        let value = basic_number(n, d)?;
        if value < 0.0 {
            return Err(Error::NegativeBasicNumber { n, value });
        }
        b[(n - 1, n)] = value.sqrt();
    }
    let b_dag = b.transpose();
    let num = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(dim, |n, _| n as f64));
    Ok(LadderRep {
        deformation: d,
        b,
        b_dag,
        num,
    })
}

/// The undeformed two-level fermion `a, a†, N`.
pub fn build_classical_rep() -> LadderRep {
    build_deformed_rep(2, Deformation::CLASSICAL).expect("[1] = 1 at q = 1")
}

/// Largest truncation `D <= limit` for which a real representation exists.
pub fn max_real_dim(d: Deformation, limit: usize) -> Result<usize> {
    let mut dim = 1;
    for n in 1..limit {
        if basic_number(n, d)? < 0.0 {
            break;
        }
        dim = n + 1;
    }
    Ok(dim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `b b† + q b† b - q^-N`
    DeformedAnticommutator,
    /// `[N, b] + b`
    NumberCommutatorB,
    /// `[N, b†] - b†`
    NumberCommutatorBdag,
    /// `b† b - [N]`
    BdagBEqBracketN,
    /// `b b† - [N+1]`
    BBdagEqBracketNPlus1,
    /// `a a† + a† a - 1`
    ClassicalAnticommutator,
    /// `a a`
    ClassicalNilpotentA,
    /// `a† a†`
    ClassicalNilpotentAdag,
    /// `N N - N`
    NumberIdempotent,
    /// `a† (1 - a† a) a - N`
    NumberFromLadder,
}

impl Relation {
    pub fn label(&self) -> &'static str {
        match self {
            Relation::DeformedAnticommutator => "b b† + q b† b - q^-N",
            Relation::NumberCommutatorB => "[N,b] + b",
            Relation::NumberCommutatorBdag => "[N,b†] - b†",
            Relation::BdagBEqBracketN => "b† b - [N]",
            Relation::BBdagEqBracketNPlus1 => "b b† - [N+1]",
            Relation::ClassicalAnticommutator => "a a† + a† a - 1",
            Relation::ClassicalNilpotentA => "a a",
            Relation::ClassicalNilpotentAdag => "a† a†",
            Relation::NumberIdempotent => "N N - N",
            Relation::NumberFromLadder => "a† (1 - a† a) a - N",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraResidual {
    pub relation: Relation,
    /// Max-abs entry of the residual matrix on the checked subspace.
    pub residual_norm: f64,
    /// Checked basis states `|n>` for `n` in this range.
    pub checked_subspace: std::ops::Range<usize>,
}

/// `[N, m]` with `N = diag(0, 1, ...)`, computed entrywise as
/// `(i - j) m_ij` so that integer level differences carry no rounding.
pub fn number_commutator(m: &DMatrix<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        (i as f64 - j as f64) * m[(i, j)]
    })
}

fn max_abs_on(m: &DMatrix<f64>, keep: usize) -> f64 {
    m.view((0, 0), (keep, keep))
        .iter()
        .fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Residuals of the deformed algebra on `n <= D-2`.
pub fn check_deformed_algebra(rep: &LadderRep) -> Result<Vec<AlgebraResidual>> {
    let dim = rep.dim();
    let keep = dim - 1;
    let d = rep.deformation;
    let q = d.q();

    let bdag_b = &rep.b_dag * &rep.b;
    let b_bdag = &rep.b * &rep.b_dag;

    let mut q_pow_minus_n = DMatrix::<f64>::zeros(dim, dim);
    let mut bracket_n = DMatrix::<f64>::zeros(dim, dim);
    let mut bracket_n1 = DMatrix::<f64>::zeros(dim, dim);
    for n in 0..dim {
        q_pow_minus_n[(n, n)] = q.powi(-(n as i32));
        bracket_n[(n, n)] = basic_number(n, d)?;
        bracket_n1[(n, n)] = basic_number(n + 1, d)?;
    }

    let anticomm = &b_bdag + &bdag_b * q - &q_pow_minus_n;
    let comm_b = number_commutator(&rep.b) + &rep.b;
    let comm_bdag = number_commutator(&rep.b_dag) - &rep.b_dag;

    let entries = [
        (Relation::DeformedAnticommutator, anticomm),
        (Relation::NumberCommutatorB, comm_b),
        (Relation::NumberCommutatorBdag, comm_bdag),
        (Relation::BdagBEqBracketN, bdag_b - bracket_n),
        (Relation::BBdagEqBracketNPlus1, b_bdag - bracket_n1),
    ];
    Ok(entries
        .into_iter()
        .map(|(relation, m)| AlgebraResidual {
            relation,
            residual_norm: max_abs_on(&m, keep),
            checked_subspace: 0..keep,
        })
        .collect())
}

/// Residuals of the undeformed relations `a a† + a† a = 1`, `a² = (a†)² = 0`,
/// `N² = N` and `N = a†(1 - a†a)a`, checked on the full space of `rep`.
pub fn check_classical_algebra(rep: &LadderRep) -> Vec<AlgebraResidual> {
    let dim = rep.dim();
    let id = DMatrix::<f64>::identity(dim, dim);
    let a = &rep.b;
    let ad = &rep.b_dag;
    let n = &rep.num;
    let entries = [
        (Relation::ClassicalAnticommutator, a * ad + ad * a - &id),
        (Relation::ClassicalNilpotentA, a * a),
        (Relation::ClassicalNilpotentAdag, ad * ad),
        (Relation::NumberIdempotent, n * n - n),
        (Relation::NumberFromLadder, ad * (&id - ad * a) * a - n),
    ];
    entries
        .into_iter()
        .map(|(relation, m)| AlgebraResidual {
            relation,
            residual_norm: max_abs_on(&m, dim),
            checked_subspace: 0..dim,
        })
        .collect()
}

/// `|[n]!|`, the squared norm of `(b†)^n |0>` before normalization.
pub fn weak_exclusion_norm(n: usize, d: Deformation) -> Result<f64> {
    basic_factorial(n, d).map(f64::abs)
}
