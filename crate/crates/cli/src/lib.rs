//! Command-line front end for `elliptika`: verification sweeps, single-point
//! evaluation and the acceptance suite.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a usage
//! or configuration error.

pub mod certify;
pub mod commands;
pub mod config;
pub mod output;

use clap::{Parser, Subcommand};
use thiserror::Error;

use commands::Report;
use config::{parse_complex, parse_complex_list, parse_indices, parse_pairs, parse_real_list, GlobalArgs};
use output::render;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A library failure in the middle of a sweep.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "elliptika", version, about = "Verify Jacobi-function Fourier pairs and lattice-series identities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourier transforms of catalog pairs against their closed forms.
    VerifyPairs {
        /// `all`, `tables`, `warmups`, or a list such as `0a,4,25`.
        #[arg(long, default_value = "all")]
        pairs: String,
        /// Frequencies, comma separated.
        #[arg(long, allow_hyphen_values = true, default_value = "-1.3,0.35,2.0")]
        y: String,
    },
    /// One value of a completed series.
    Eval {
        #[arg(long)]
        j: u8,
        #[arg(long)]
        l: u8,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Residuals of the functional equations.
    Funceq {
        #[arg(long, default_value = "all")]
        indices: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0.5,0.5+1.3i,0.5-1.3i,-0.25")]
        s: String,
    },
    /// Residues at s = 1 of the four series with a pole there.
    Residues,
    /// Derivative formulas at integer points against closed forms.
    SpecialValues {
        #[arg(long, default_value = "all")]
        indices: String,
        /// Largest n.
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Mellin reflection checks.
    MellinCheck {
        #[arg(long, default_value = "4,13")]
        pairs: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0.5,0.6,0.5+0.5i")]
        z: String,
    },
    /// The acceptance suite, one summary row per criterion.
    Certify,
}

/// What a run prints and how it exits.
#[derive(Debug)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn finish(report: Report, global: &GlobalArgs) -> RunOutput {
    let stdout = render(&report.records, global.format);
    if report.failures.is_empty() {
        RunOutput { stdout, stderr: String::new(), code: 0 }
    } else {
        let mut stderr = format!("{} check(s) failed:\n", report.failures.len());
        for f in &report.failures {
            stderr.push_str("  ");
            stderr.push_str(f);
            stderr.push('\n');
        }
        RunOutput { stdout, stderr, code: 1 }
    }
}

fn dispatch(cli: &Cli) -> Result<RunOutput, CliError> {
    let g = &cli.global;
    let tol = g.check_tol()?;
    let modulus = g.modulus()?;
    g.install_threads()?;
    let report = match &cli.command {
        Command::VerifyPairs { pairs, y } => {
            commands::verify_pairs(&modulus, &parse_pairs(pairs)?, &parse_real_list(y)?, tol)?
        }
        Command::Eval { j, l, s } => {
            let idx = elliptika::eisenstein::SeriesIndex::new(*j, *l).map_err(|e| CliError::Usage(e.to_string()))?;
            commands::eval(&modulus, idx, parse_complex(s)?)?
        }
        Command::Funceq { indices, s } => {
            commands::funceq(&parse_indices(indices)?, &parse_complex_list(s)?, &[modulus.tau()])?
        }
        Command::Residues => commands::residues(modulus.tau())?,
        Command::SpecialValues { indices, n } => commands::special_values(&modulus, &parse_indices(indices)?, *n)?,
        Command::MellinCheck { pairs, z } => {
            commands::mellin_check(&modulus, &parse_pairs(pairs)?, &parse_complex_list(z)?)?
        }
        Command::Certify => {
            let outcomes = certify::certify(&modulus, tol, g.seed);
            let mut report = Report::default();
            for o in &outcomes {
                report.records.push(o.record());
                if o.status == certify::Status::Fail {
                    let note = if o.note.is_empty() { String::new() } else { format!(" ({})", o.note) };
                    report.failures.push(format!("criterion {} {}{note}", o.number, o.name));
                }
            }
            report
        }
    };
    Ok(finish(report, g))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> RunOutput {
    dispatch(cli).unwrap_or_else(|e| RunOutput {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}
