//! Batch interface: a TOML run description in, CSV out.

mod config;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub use config::{parse_config, serialize_config, RunConfig};
pub use run::{fmt_g, run, Check, Command, Outcome, Overrides};

#[derive(Debug, Parser)]
#[command(name = "nevlab", version, about = "Value-distribution checks for polynomial curves")]
pub struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Report primitivity, nondegeneracy and the position of the hyperplanes.
    Check(Common),
    /// Every functional at one radius.
    Compute(Common),
    /// Heights, proximities and the main margin over the radius grid.
    Sweep(Common),
    /// One inequality or identity family over the radius grid.
    Verify {
        #[arg(value_enum)]
        name: Check,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    /// Radius for `compute`; defaults to `r_min`.
    #[arg(long)]
    r: Option<f64>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Quadrature tolerance, overriding the config.
    #[arg(long)]
    tol: Option<f64>,
}

/// Parses arguments, runs the command and maps the outcome to an exit code:
/// 0 on success, 1 when a hard invariant fails, 2 on bad input or a failed
/// precondition.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (command, common) = match cli.command {
        Cmd::Check(c) => (Command::Check, c),
        Cmd::Compute(c) => (Command::Compute, c),
        Cmd::Sweep(c) => (Command::Sweep, c),
        Cmd::Verify { name, common } => (Command::Verify(name), common),
    };
    match execute(command, &common) {
        Ok(outcome) => {
            for f in &outcome.failures {
                eprintln!("failed: {f}");
            }
            if outcome.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command, common: &Common) -> crate::Result<Outcome> {
    let text = std::fs::read_to_string(&common.config)?;
    let config = parse_config(&text)?;
    let outcome = run(
        command,
        &config,
        Overrides {
            r: common.r,
            tol: common.tol,
        },
    )?;
    match &common.out {
        Some(path) => std::fs::write(path, &outcome.output)?,
        None => print!("{}", outcome.output),
    }
    Ok(outcome)
}
