//! Command-line front end: matrix files in, invariants and verified
//! transforms out, as text or JSON.

pub mod commands;
pub mod matrix_file;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::Options;

#[derive(Debug, Parser)]
#[command(
    name = "elemdiv",
    version,
    about = "Exact Smith forms, elementary divisors, canonical forms, pencils and small oscillations"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report invariants only.
    #[arg(long, global = true)]
    pub no_transform: bool,
    /// Seed for randomized self-tests in `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith form of λI − A, or of A itself over Z with --integer.
    Smith {
        file: PathBuf,
        #[arg(long)]
        integer: bool,
    },
    /// Invariant factors and the minor-gcd chain of λI − A.
    Invfactors { file: PathBuf },
    /// Elementary divisors of λI − A.
    Eldiv { file: PathBuf },
    /// Jordan form with transform (needs a split characteristic polynomial).
    Jordan { file: PathBuf },
    /// Rational canonical (companion) form with transform.
    Rcf { file: PathBuf },
    /// Primary (hypercompanion) form with transform.
    Primary { file: PathBuf },
    /// Decide similarity of two matrices.
    Similar { a: PathBuf, b: PathBuf },
    /// Homogeneous elementary divisors of the pencil uP + vQ.
    PencilEldiv { p: PathBuf, q: PathBuf },
    /// Decide strict equivalence of two pencils.
    PencilEquiv {
        p: PathBuf,
        q: PathBuf,
        p2: PathBuf,
        q2: PathBuf,
    },
    /// Canonical pair of a regular pencil with its transforms.
    PencilCanon { p: PathBuf, q: PathBuf },
    /// Elementary bilinear forms and their determinant identities.
    KronForm {
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long)]
        size: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Modes and stability of M y″ + K y = 0.
    Oscillate { m: PathBuf, k: PathBuf },
    /// Recompute every transform and chain for a matrix.
    Verify { file: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Refusal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Refusal(_) => 2,
        }
    }
}

impl From<elemdiv::Error> for CliError {
    fn from(e: elemdiv::Error) -> Self {
        use elemdiv::Error as E;
        match e {
            E::SplitFieldRequired { .. }
            | E::SingularPencil { .. }
            | E::NonlinearFactor(_)
            | E::OracleCapExceeded { .. } => CliError::Refusal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a full command line (program name first) without touching the
/// process streams.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let opts = Options {
        json: cli.json,
        no_transform: cli.no_transform,
        seed: cli.seed,
    };
    match commands::run(&cli.command, opts) {
        Ok(report) => {
            let stdout = report.render(opts.json);
            if report.verified {
                Outcome {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 1,
                    stdout,
                    stderr: format!("error: {} result failed verification\n", report.kind),
                }
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
