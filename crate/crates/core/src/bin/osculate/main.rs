//! `osculate`: enumerate walker configurations, print closed-form series,
//! and verify the functional equations that link them.
//!
//! Exit status: 0 when everything requested succeeded and every residual
//! vanished, 1 when a verification failed or an internal error occurred,
//! 2 on invalid usage.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use osculate::enumerator::{enumerate_dp_with, DpOptions, Mode};
use osculate::run::{
    evaluate_series, parse_start, render_outcomes, render_table, run_checks, walker_system,
    CheckName, Format, SeriesKind,
};
use osculate::Error;

#[derive(Parser)]
#[command(
    name = "osculate",
    version,
    about = "Exact enumeration and generating functions of osculating walkers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, default_value = "text", value_parser = clap::value_parser!(String))]
    format: String,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Count configurations by length, final gaps and osculations.
    Enumerate {
        /// non-crossing, osculating, vicious or quasi-vicious.
        #[arg(long)]
        mode: String,
        /// Start gaps: "i,j" for three walkers, "i" for two.
        #[arg(long)]
        start: String,
        /// Largest length.
        #[arg(long)]
        n: u32,
        /// Also record the bottom walker's number of up steps (column r).
        #[arg(long)]
        positioned: bool,
        /// Worker threads for the layer-parallel DP.
        #[arg(long, env = "OSCULATE_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Print a closed-form series.
    Series {
        /// T, X, Y0, baxter, osculating-length, vicious-length,
        /// osculating-refined, complete-vicious or complete-osculating.
        kind: String,
        #[arg(long)]
        start: Option<String>,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification, or all of them.
    Verify {
        /// main-eq, orbit, framed-system, boundary, quasivicious, refined,
        /// prop2, prop1, prop3, gv, baxter, ode, two-walker or all.
        check: String,
        #[arg(long, default_value = "1,1")]
        start: String,
        /// Truncation order; each check has its own default.
        #[arg(long)]
        order: Option<usize>,
        /// Worker threads running independent checks.
        #[arg(long, env = "OSCULATE_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadStart { .. } | Error::Invalid(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(e.to_string())),
    }
}

fn pair(start: &[u32]) -> (u32, u32) {
    (start[0], start.get(1).copied().unwrap_or(0))
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate {
            mode,
            start,
            n,
            positioned,
            jobs,
            common,
        } => {
            let format: Format = common.format.parse().map_err(usage)?;
            let mode: Mode = mode.parse().map_err(usage)?;
            let start = parse_start(&start).map_err(usage)?;
            let system = walker_system(&start, mode)?;
            let opts = DpOptions {
                positioned,
                parallel: jobs.is_some_and(|j| j > 1),
            };
            let table = match jobs {
                Some(j) if j > 1 => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Failure::Internal(e.to_string()))?
                    .install(|| enumerate_dp_with(system, n, opts)),
                _ => enumerate_dp_with(system, n, opts),
            };
            emit(&common, &render_table(&table, format))
        }
        Command::Series {
            kind,
            start,
            order,
            common,
        } => {
            let format: Format = common.format.parse().map_err(usage)?;
            let kind: SeriesKind = kind.parse().map_err(usage)?;
            let start = match (&start, kind.needs_start()) {
                (Some(s), _) => parse_start(s).map_err(usage)?,
                (None, true) => {
                    return Err(usage(format!("series {} needs --start i,j", kind.name())))
                }
                (None, false) => Vec::new(),
            };
            let value = evaluate_series(kind, &start, order)?;
            emit(&common, &value.render(format))
        }
        Command::Verify {
            check,
            start,
            order,
            jobs,
            common,
        } => {
            let format: Format = common.format.parse().map_err(usage)?;
            let start = parse_start(&start).map_err(usage)?;
            let (i, j) = pair(&start);
            let (checks, batch) = if check == "all" {
                (CheckName::ALL.to_vec(), true)
            } else {
                (vec![check.parse::<CheckName>().map_err(usage)?], false)
            };
            let outcomes = run_checks(&checks, i, j, order, jobs, batch)?;
            emit(&common, &render_outcomes(&outcomes, format))?;
            if outcomes.iter().all(|o| o.passed()) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
