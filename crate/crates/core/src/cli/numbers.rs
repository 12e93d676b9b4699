use super::output::{Cell, Table};
use super::{CliError, NumbersArgs};
use crate::deformed_numbers::{basic_factorial, basic_number, basic_number_gamma, Deformation};

/// One row per `n`: `[n]` from both forms, `[n]!`, and the relative residual
/// of `[n] = q^-(n-1) - q [n-1]` (zero for `n = 0`).
pub(crate) fn table(n_max: usize, d: Deformation) -> Table {
    let mut t = Table::new(vec![
        "n",
        "bracket",
        "bracket_gamma",
        "factorial",
        "recurrence_residual",
    ]);
    let q = d.q();
    for n in 0..=n_max {
        let bracket = basic_number(n, d);
        let residual: Cell = if n == 0 {
            Cell::Float(0.0)
        } else {
            match (&basic_number(n - 1, d), &bracket) {
                (Ok(prev), Ok(cur)) => {
                    let predicted = q.powi(-((n - 1) as i32)) - q * prev;
                    Cell::Float((cur - predicted).abs() / cur.abs().max(1.0))
                }
                (Err(e), _) | (_, Err(e)) => Cell::Token(e.token()),
            }
        };
        t.push(vec![
            n.into(),
            bracket.into(),
            basic_number_gamma(n, d).into(),
            basic_factorial(n, d).into(),
            residual,
        ]);
    }
    t
}

pub(crate) fn render(args: &NumbersArgs) -> Result<String, CliError> {
    let d = Deformation::from_q(args.q).map_err(|e| CliError::Usage(e.to_string()))?;
    table(args.n_max, d).render(args.format)
}
