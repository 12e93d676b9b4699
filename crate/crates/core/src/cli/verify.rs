use std::fmt::Write as _;

use clap::ValueEnum;

use super::{pick_list, CliError, VerifyArgs};
use crate::deformed_numbers::{
    basic_factorial, basic_number, basic_number_gamma, basic_number_sequence, Deformation,
};
use crate::error::Error;
use crate::fock_algebra::{
    build_classical_rep, build_deformed_rep, check_classical_algebra, check_deformed_algebra,
    weak_exclusion_norm,
};
use crate::series::{GeometricFamily, SummationMethod};
use crate::thermo_classical::{classical_distribution, classical_report, ThermalPoint};
use crate::thermo_deformed::{
    corrected_distribution_at, deformed_partition, deformed_spectrum,
    naive_first_order_distribution_closed, naive_first_order_distribution_series, POLE_GUARD,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Identities,
    Limits,
    All,
}

const IDENTITY_Q_GRID: [f64; 8] = [0.1, 0.3, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0];
const CLOSED_Q_GRID: [f64; 7] = [0.3, 0.5, 0.9, 1.1, 2.0, 3.0, 5.0];
const X_GRID: [f64; 5] = [0.5, 1.0, 2.0, 5.0, 10.0];
// Points where a real representation exists; q > 1 only admits D = 2.
const ALGEBRA_POINTS: [(usize, f64); 4] = [(2, 0.5), (2, 2.0), (6, 0.95), (12, 1.0)];

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// Measured residual (or value) compared against `tolerance`.
    pub measured: Option<f64>,
    pub tolerance: Option<f64>,
    pub note: Option<String>,
    pub pass: bool,
}

impl Check {
    fn within(suite: &'static str, name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Check {
            suite,
            name: name.into(),
            measured: Some(measured),
            tolerance: Some(tolerance),
            note: None,
            pass: measured <= tolerance,
        }
    }

    fn flag(
        suite: &'static str,
        name: impl Into<String>,
        pass: bool,
        note: impl Into<String>,
    ) -> Self {
        Check {
            suite,
            name: name.into(),
            measured: None,
            tolerance: None,
            note: Some(note.into()),
            pass,
        }
    }

    fn failed(suite: &'static str, name: impl Into<String>, err: &Error) -> Self {
        Check::flag(suite, name, false, format!("{}: {err}", err.token()))
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn dq(q: f64) -> Result<Deformation, CliError> {
    Deformation::from_q(q).map_err(|e| CliError::Usage(e.to_string()))
}

fn tp(x: f64) -> Result<ThermalPoint, CliError> {
    ThermalPoint::new(x).map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs `max` over a fallible sweep, turning the first error into a failed check.
fn max_over<I>(suite: &'static str, name: &str, tol: f64, items: I) -> Check
where
    I: IntoIterator<Item = crate::Result<f64>>,
{
    let mut worst = 0.0_f64;
    for item in items {
        match item {
            Ok(v) => worst = worst.max(v),
            Err(e) => return Check::failed(suite, name, &e),
        }
    }
    Check::within(suite, name, worst, tol)
}

fn algebra(args: &VerifyArgs) -> Result<Vec<Check>, CliError> {
    const S: &str = "algebra";
    let points: Vec<(usize, f64)> = if args.q.is_some() || args.dim.is_some() {
        vec![(args.dim.unwrap_or(2), args.q.unwrap_or(1.0))]
    } else {
        ALGEBRA_POINTS.to_vec()
    };
    let mut out = Vec::new();
    for (dim, q) in points {
        let d = dq(q)?;
        let label = format!("deformed algebra D={dim} q={q}");
        match build_deformed_rep(dim, d).and_then(|rep| check_deformed_algebra(&rep)) {
            Ok(residuals) => {
                for r in residuals {
                    out.push(Check::within(
                        S,
                        format!("{label}: {}", r.relation.label()),
                        r.residual_norm,
                        1e-10,
                    ));
                }
            }
            Err(e) => out.push(Check::failed(S, label, &e)),
        }
    }
    let classical = build_classical_rep();
    let worst = check_classical_algebra(&classical)
        .iter()
        .map(|r| r.residual_norm)
        .fold(0.0, f64::max);
    out.push(Check::within(
        S,
        "classical fermion relations exact",
        worst,
        0.0,
    ));
    let ev = classical.number_eigenvalues();
    out.push(Check::flag(
        S,
        "classical number eigenvalues are {0, 1}",
        ev == [0.0, 1.0],
        format!("{ev:?}"),
    ));
    Ok(out)
}

fn identities(q_grid: &[f64], closed_grid: &[f64], x_grid: &[f64]) -> Result<Vec<Check>, CliError> {
    const S: &str = "identities";
    let mut out = Vec::new();

    out.push(max_over(
        S,
        "basic-number recurrence, n <= 50: max rel residual",
        1e-12,
        q_grid.iter().map(|&q| {
            let d = Deformation::from_q(q)?;
            basic_number_sequence(50, d).map(|s| s.recurrence_residual())
        }),
    ));

    out.push(max_over(
        S,
        "gamma form vs rational form, n <= 50: max rel err",
        1e-12,
        q_grid.iter().flat_map(|&q| {
            (0..=50).map(move |n| {
                let d = Deformation::from_q(q)?;
                Ok(rel_err(basic_number_gamma(n, d)?, basic_number(n, d)?))
            })
        }),
    ));

    let alternates = (0..=50).all(|n| {
        let expected = (n % 2) as f64;
        basic_number(n, Deformation::CLASSICAL) == Ok(expected)
    });
    out.push(Check::flag(
        S,
        "q = 1 basic numbers are 0,1,0,1,... exactly",
        alternates,
        "n <= 50",
    ));
    let collapse = (2..=50).all(|n| basic_factorial(n, Deformation::CLASSICAL) == Ok(0.0));
    out.push(Check::flag(
        S,
        "q = 1 factorial vanishes for n >= 2",
        collapse,
        "n <= 50",
    ));

    let mut closed_pairs = Vec::new();
    for &q in closed_grid
        .iter()
        .filter(|q| (**q - 1.0).abs() >= POLE_GUARD)
    {
        for &x in x_grid {
            closed_pairs.push((dq(q)?, tp(x)?));
        }
    }
    out.push(max_over(
        S,
        "closed form vs geometric series: max rel err",
        1e-12,
        closed_pairs.iter().map(|&(d, t)| {
            let series = naive_first_order_distribution_series(
                d,
                t,
                0,
                SummationMethod::GeometricClosedForm,
            )?;
            let closed = naive_first_order_distribution_closed(d, t)?;
            Ok((series.value - closed).abs() / closed.abs())
        }),
    ));

    out.push(max_over(
        S,
        "convergent geometric sub-series at n = 2000 vs formal sum: max rel err",
        1e-12,
        closed_grid
            .iter()
            .filter(|q| (**q - 1.0).abs() >= POLE_GUARD)
            .flat_map(|&q| {
                GeometricFamily::ALL
                    .into_iter()
                    .filter(move |f| f.converges_termwise(q))
                    .map(move |f| {
                        let formal = f.formal_sum(q);
                        Ok((f.partial_sum(q, 2000) - formal).abs() / formal.abs())
                    })
            }),
    ));

    out.push(max_over(
        S,
        "closed form odd under q -> 1/q: max abs err",
        1e-13,
        closed_pairs.iter().map(|&(d, t)| {
            let inv = Deformation::from_q(1.0 / d.q())?;
            Ok((naive_first_order_distribution_closed(d, t)?
                + naive_first_order_distribution_closed(inv, t)?)
            .abs())
        }),
    ));

    let mut xs = vec![1e-6];
    xs.extend_from_slice(x_grid);
    xs.push(60.0);
    let points = xs.iter().map(|&x| tp(x)).collect::<Result<Vec<_>, _>>()?;
    out.push(Check::within(
        S,
        "classical distribution: Fermi form vs tanh form",
        points
            .iter()
            .map(|&t| (classical_distribution(t) + 0.5 * (t.x() / 2.0).tanh()).abs())
            .fold(0.0, f64::max),
        1e-15,
    ));
    out.push(Check::within(
        S,
        "classical distribution: sum of (n - 1/2) P_n",
        points
            .iter()
            .map(|&t| {
                let r = classical_report(t);
                (-0.5 * r.occupation_probs[0] + 0.5 * r.occupation_probs[1] - r.distribution).abs()
            })
            .fold(0.0, f64::max),
        1e-15,
    ));
    Ok(out)
}

fn limits(q_grid: &[f64], closed_grid: &[f64], x_grid: &[f64]) -> Result<Vec<Check>, CliError> {
    const S: &str = "limits";
    let mut out = Vec::new();
    let closed_qs: Vec<f64> = closed_grid
        .iter()
        .copied()
        .filter(|q| (q - 1.0).abs() >= POLE_GUARD)
        .collect();

    out.push(max_over(
        S,
        "naive low-T plateau q/(2(q^2-1)) at x = 80",
        1e-12,
        closed_qs.iter().map(|&q| {
            let f = naive_first_order_distribution_closed(
                Deformation::from_q(q)?,
                ThermalPoint::new(80.0)?,
            )?;
            Ok((f - 0.5 * q / (q * q - 1.0)).abs())
        }),
    ));
    out.push(max_over(
        S,
        "naive high-T vanishing at x = 1e-9, q in {2, 3}",
        1e-9,
        [2.0, 3.0].into_iter().map(|q| {
            naive_first_order_distribution_closed(Deformation::from_q(q)?, ThermalPoint::new(1e-9)?)
                .map(f64::abs)
        }),
    ));
    out.push(max_over(
        S,
        "naive high-T slope f/x -> q/(4(q^2-1)) at x = 1e-9: max rel err",
        1e-12,
        closed_qs.iter().map(|&q| {
            let f = naive_first_order_distribution_closed(
                Deformation::from_q(q)?,
                ThermalPoint::new(1e-9)?,
            )?;
            let slope = 0.25 * q / (q * q - 1.0);
            Ok((f / 1e-9 - slope).abs() / slope.abs())
        }),
    ));
    let pole = naive_first_order_distribution_closed(Deformation::CLASSICAL, tp(2.0)?);
    out.push(Check::flag(
        S,
        "naive closed form refuses q = 1",
        matches!(pole, Err(Error::PoleAtQOne { .. })),
        pole.map_or_else(|e| e.token().to_string(), |v| v.to_string()),
    ));

    let mut xs = vec![1e-6];
    xs.extend_from_slice(x_grid);
    xs.push(60.0);
    out.push(max_over(
        S,
        "corrected distribution vs classical",
        1e-14,
        q_grid.iter().flat_map(|&q| {
            xs.iter().map(move |&x| {
                let t = ThermalPoint::new(x)?;
                Ok(
                    (corrected_distribution_at(Deformation::from_q(q)?, t)
                        + 0.5 * (x / 2.0).tanh())
                    .abs(),
                )
            })
        }),
    ));

    let u_low = classical_report(tp(60.0)?).internal_energy_per_osc;
    out.push(Check::within(
        S,
        "classical U/N at x = 60 equals -1/2",
        (u_low + 0.5).abs(),
        1e-13,
    ));
    let u_high = classical_report(tp(1e-8)?).internal_energy_per_osc;
    out.push(Check::within(
        S,
        "classical U/N at x = 1e-8 vanishes",
        u_high.abs(),
        1e-8,
    ));

    let mut id_xs = vec![1e-3];
    id_xs.extend_from_slice(x_grid);
    id_xs.push(60.0);
    let mut worst_identity = 0.0_f64;
    let mut worst_norm = 0.0_f64;
    for &x in &id_xs {
        let t = tp(x)?;
        let r = classical_report(t);
        worst_identity = worst_identity
            .max((r.free_energy + t.temperature() * r.entropy - r.internal_energy_per_osc).abs());
        worst_norm = worst_norm.max((r.occupation_probs[0] + r.occupation_probs[1] - 1.0).abs());
    }
    out.push(Check::within(
        S,
        "classical U = F + TS",
        worst_identity,
        1e-12,
    ));
    out.push(Check::within(S, "classical P0 + P1 = 1", worst_norm, 1e-14));

    out.push(max_over(
        S,
        "ground level E_0 = -1/2",
        0.0,
        q_grid.iter().map(|&q| {
            let s = deformed_spectrum(1, Deformation::from_q(q)?)?;
            Ok((s.levels[0] + 0.5).abs())
        }),
    ));
    match deformed_spectrum(3, dq(2.0)?) {
        Ok(s) => {
            let expected = [-0.5, 1.25, -2.375, 4.8125];
            let worst = s
                .levels
                .iter()
                .zip(expected)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            out.push(Check::within(
                S,
                "q = 2 levels (-0.5, 1.25, -2.375, 4.8125)",
                worst,
                1e-12,
            ));
        }
        Err(e) => out.push(Check::failed(S, "q = 2 levels", &e)),
    }
    let reference = deformed_spectrum(10, Deformation::CLASSICAL)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    out.push(max_over(
        S,
        "spectrum continuous at q = 1 +- 1e-6",
        1e-4,
        [1.0 - 1e-6, 1.0 + 1e-6].into_iter().map(|q| {
            let s = deformed_spectrum(10, Deformation::from_q(q)?)?;
            Ok(s.levels
                .iter()
                .zip(&reference.levels)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max))
        }),
    ));

    let z = deformed_partition(dq(2.0)?, tp(2.0)?, 20);
    out.push(Check::flag(
        S,
        "partition divergence detected at q = 2, x = 2, n_max = 20",
        z.diverged_at.is_some() && !z.converged,
        format!("diverged_at = {:?}", z.diverged_at),
    ));

    out.push(max_over(
        S,
        "weak exclusion norm |[n]!| at q = 1 +- 1e-4, n = 2..4",
        1e-3,
        [1.0 - 1e-4, 1.0 + 1e-4]
            .into_iter()
            .flat_map(|q| (2..=4).map(move |n| weak_exclusion_norm(n, Deformation::from_q(q)?))),
    ));
    Ok(out)
}

pub(crate) fn run_suite(args: &VerifyArgs) -> Result<Vec<Check>, CliError> {
    let user_q = pick_list(None, args.q_list.as_ref());
    let q_grid = user_q.clone().unwrap_or_else(|| IDENTITY_Q_GRID.to_vec());
    let closed_grid = user_q.unwrap_or_else(|| CLOSED_Q_GRID.to_vec());
    let x_grid = pick_list(args.x, args.x_list.as_ref()).unwrap_or_else(|| X_GRID.to_vec());
    for &q in &q_grid {
        dq(q)?;
    }
    for &x in &x_grid {
        tp(x)?;
    }

    let mut checks = Vec::new();
    if matches!(args.suite, Suite::Algebra | Suite::All) {
        checks.extend(algebra(args)?);
    }
    if matches!(args.suite, Suite::Identities | Suite::All) {
        checks.extend(identities(&q_grid, &closed_grid, &x_grid)?);
    }
    if matches!(args.suite, Suite::Limits | Suite::All) {
        checks.extend(limits(&q_grid, &closed_grid, &x_grid)?);
    }
    Ok(checks)
}

pub(crate) fn render(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let _ = match (c.measured, c.tolerance, &c.note) {
            (Some(m), Some(t), _) => writeln!(
                s,
                "[{}] {}: {:.3e} <= {:.0e}: {}",
                c.suite, c.name, m, t, verdict
            ),
            (_, _, Some(note)) => writeln!(s, "[{}] {} ({}): {}", c.suite, c.name, note, verdict),
            _ => writeln!(s, "[{}] {}: {}", c.suite, c.name, verdict),
        };
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(s, "{passed}/{} checks passed", checks.len());
    s
}
