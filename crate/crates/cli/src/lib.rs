//! Batch driver for the qlab workbench: seeded verification suites and
//! one-shot expression evaluation.

pub mod checks;
pub mod eval;
pub mod gen;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use qlab_core::exec::Execution;
use thiserror::Error;

use crate::report::{render_json, render_text, run_suite, RunOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qlab_core::Error),
}

impl CliError {
    /// 2 for usage and parse errors, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(qlab_core::Error::Parse { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qlab", version, about = "Exact rings of quotients, regular-open algebras and finite Stone duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and report counterexamples.
    Verify {
        /// topology, pwfun, quotient, finring, boolean, limits or all.
        #[arg(value_parser = suite_name)]
        suite: String,
        #[arg(long, env = "QLAB_SEED", default_value_t = 0)]
        seed: u64,
        /// Case count for every randomly generated check.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Degree bound for generated polynomials.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(0..=gen::DEGREE_CAP as i64))]
        max_degree: u8,
        /// Run cases on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Parse an expression (or `@file`) and apply an operation.
    Eval {
        expr: String,
        /// Operation, or `check:<name>` to replay a check on `|`-separated inputs.
        #[arg(long, default_value = "show")]
        op: String,
        /// Parameter of `step-approx`.
        #[arg(long)]
        n: Option<u32>,
    },
    /// List the checks of every suite.
    List,
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || checks::SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected one of {}, all", checks::SUITES.join(", ")))
    }
}

fn read_expr(expr: &str) -> Result<String, CliError> {
    match expr.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(expr.to_string()),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Verify { suite, seed, cases, json, max_degree, sequential } => {
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let opts = RunOptions { seed, cases, max_degree: max_degree.into(), exec };
            match run_suite(&suite, &opts) {
                Ok(report) => {
                    let text = if json { render_json(&report) + "\n" } else { render_text(&report) };
                    let _ = out.write_all(text.as_bytes());
                    i32::from(!report.ok())
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Command::Eval { expr, op, n } => match read_expr(&expr).and_then(|t| eval::eval(&op, n, &t)) {
            Ok(o) => {
                let _ = writeln!(out, "{}", o.text);
                i32::from(!o.ok)
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                e.exit_code()
            }
        },
        Command::List => {
            for c in checks::registry() {
                let _ = writeln!(out, "{} ({} cases)", c.id(), c.case_count(None));
            }
            0
        }
    }
}
