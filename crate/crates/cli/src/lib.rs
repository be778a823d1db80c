//! `comexp` command-line front end: JSON matrix I/O, analysis reports,
//! sweeps, catalog access and the self-test harness.

pub mod json;

use clap::{Args, Parser, Subcommand};
use comexp::analysis::sweep_records;
use comexp::catalog::{catalog, find};
use comexp::selftest::selftest;
use comexp::{analyze, CMatrix, Tolerances};
use json::{parse_pair, NamedPairJson, PairJson, ReportJson, SelfTestJson, SweepLine};
use std::io::{Read, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "comexp",
    version,
    about = "Commuting exponentials of complex matrices of dimension ≤ 3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// JSON file with {"A": matrix, "B": matrix}; "-" reads stdin
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Largest t checked by the sweep
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    pub tmax: u64,
    /// Relative entrywise tolerance for exponential comparisons
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis report as JSON
    Analyze(InputArgs),
    /// Per-t identity check as JSON lines
    Sweep(InputArgs),
    /// Built-in example pairs
    Catalog {
        /// Print the names of all entries
        #[arg(long, conflicts_with = "name")]
        list: bool,
        /// Print one entry
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the invariant suite over generated pairs
    Selftest {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        seeds: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        tmax: u64,
        /// Sets the entry tolerance to zero so that checks must fail
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn validation(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| validation(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| validation(e.to_string()))
}

fn read_pair(
    args: &InputArgs,
    stdin: &mut dyn Read,
) -> Result<(CMatrix, CMatrix, Tolerances), Failure> {
    let mut text = String::new();
    if args.input.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| validation(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(&args.input)
            .map_err(|e| validation(format!("{}: {e}", args.input.display())))?;
    }
    let pair: PairJson =
        serde_json::from_str(&text).map_err(|e| validation(format!("malformed input: {e}")))?;
    let (a, b) = parse_pair(&pair).map_err(validation)?;
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(validation("--tol must be a positive finite number"));
    }
    Ok((a, b, Tolerances::default().with_entry(args.tol)))
}

/// Runs one command; returns the exit code.
pub fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze(args) => {
            let (a, b, tol) = read_pair(args, stdin)?;
            let report = analyze(&a, &b, args.tmax, &tol).map_err(|e| validation(e.to_string()))?;
            emit(out, &ReportJson::from(&report))?;
            Ok(if report.consistent {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            })
        }
        Command::Sweep(args) => {
            let (a, b, tol) = read_pair(args, stdin)?;
            let records =
                sweep_records(&a, &b, args.tmax, &tol).map_err(|e| validation(e.to_string()))?;
            for r in records {
                let line = SweepLine {
                    t: r.t,
                    deviation: r.deviation,
                    pass: r.pass,
                };
                let text = serde_json::to_string(&line).map_err(|e| validation(e.to_string()))?;
                writeln!(out, "{text}").map_err(|e| validation(e.to_string()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { list, name } => match (list, name) {
            (_, Some(name)) => {
                let p = find(name)
                    .ok_or_else(|| validation(format!("unknown catalog entry {name:?}")))?;
                emit(out, &NamedPairJson::from(&p))?;
                Ok(EXIT_OK)
            }
            (true, None) => {
                let names: Vec<&str> = catalog().iter().map(|p| p.name).collect();
                emit(out, &names)?;
                Ok(EXIT_OK)
            }
            (false, None) => Err(validation("catalog needs --list or --name NAME")),
        },
        Command::Selftest {
            seeds,
            tmax,
            inject_fault,
        } => {
            let mut tol = Tolerances::default();
            if *inject_fault {
                tol.eps_entry = 0.0;
            }
            let s = selftest(*seeds, *tmax, &tol);
            emit(
                out,
                &SelfTestJson {
                    pass: s.pass,
                    fail: s.fail,
                    details: s.details,
                },
            )?;
            Ok(if s.fail == 0 { EXIT_OK } else { EXIT_INVARIANT })
        }
    }
}
