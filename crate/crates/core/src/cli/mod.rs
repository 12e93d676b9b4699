//! Command-line front end: `numbers`, `sweep` and `verify`.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! usage errors. Data streams contain no timestamps, so identical
//! invocations produce byte-identical output.

mod numbers;
mod output;
mod sweep;
mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use output::{format_f64, Cell, Table};
pub use sweep::{Quantity, SweepSpec};
pub use verify::{Check, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qfermion",
    version,
    about = "Statistical mechanics of q-deformed fermion oscillators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate basic numbers, their gamma form, factorials and recurrence residuals.
    Numbers(NumbersArgs),
    /// Evaluate quantities over a grid of deformations and temperatures.
    Sweep(SweepArgs),
    /// Run the built-in verification checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write output to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NumbersArgs {
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long)]
    pub q: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, conflicts_with = "q_list")]
    pub q: Option<f64>,
    /// Comma-separated deformation values.
    #[arg(long, value_delimiter = ',')]
    pub q_list: Option<Vec<f64>>,
    #[arg(long, conflicts_with = "x_list")]
    pub x: Option<f64>,
    /// Comma-separated values of x = βħω.
    #[arg(long, value_delimiter = ',')]
    pub x_list: Option<Vec<f64>>,
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    /// Comma-separated quantities; all of them when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub quantities: Option<Vec<Quantity>>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Single deformation for the algebra suite.
    #[arg(long, conflicts_with = "q_list")]
    pub q: Option<f64>,
    /// Deformation grid for the identity and limit suites.
    #[arg(long, value_delimiter = ',')]
    pub q_list: Option<Vec<f64>>,
    #[arg(long, conflicts_with = "x_list")]
    pub x: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub x_list: Option<Vec<f64>>,
    /// Fock truncation for the algebra suite.
    #[arg(long)]
    pub dim: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (text, code, out) = match cli.command {
        Command::Numbers(args) => {
            let text = numbers::render(&args)?;
            (text, EXIT_OK, args.output.out)
        }
        Command::Sweep(args) => {
            let spec = SweepSpec::from_args(&args)?;
            let text = sweep::render(&spec, args.format)?;
            (text, EXIT_OK, args.output.out)
        }
        Command::Verify(args) => {
            let checks = verify::run_suite(&args)?;
            let text = verify::render(&checks);
            let code = if checks.iter().all(|c| c.pass) {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            (text, code, args.output.out)
        }
    };
    match out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(code)
}

pub(crate) fn pick_list(single: Option<f64>, list: Option<&Vec<f64>>) -> Option<Vec<f64>> {
    match (single, list) {
        (Some(v), _) => Some(vec![v]),
        (None, Some(l)) => Some(l.clone()),
        (None, None) => None,
    }
}
