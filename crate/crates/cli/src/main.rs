//! `sumbridge`: lower bounds, exhaustive search and moment checks for
//! sequences with distinct subset sums.
//!
//! Exit codes: 0 success, 1 property refuted, 2 usage or input error,
//! 3 resource budget exceeded.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sumbridge::bounds::{crossover_table, lower_bound_m};
use sumbridge::geometry::{lattice_shell_enumerate, DEFAULT_LATTICE_BUDGET};
use sumbridge::moments::{exact_moment_with_budget, mc_estimate, DEFAULT_SEED, DEFAULT_TABLE_BUDGET};
use sumbridge::sequence::{bound_vs_search_report, min_m_search, verify_distinct, DEFAULT_SEARCH_BUDGET};
use sumbridge::{Method, VectorSequence};

#[derive(Parser)]
#[command(name = "sumbridge", version, about = "Lower bounds and experiments for distinct subset sums")]
struct Cli {
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Resource budget: search nodes, lattice points or DP table cells.
    #[arg(long, global = true, value_name = "NODES")]
    budget: Option<u64>,
    /// Seed for Monte Carlo runs.
    #[arg(long, global = true, value_name = "U64", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Mc,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bounds on M from the first-moment, third-moment and variance methods.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        k: u32,
    },
    /// Coefficient comparison across dimensions (CSV by default).
    Crossover {
        #[arg(long, default_value_t = 1)]
        k_min: u32,
        #[arg(long, default_value_t = 30)]
        k_max: u32,
    },
    /// Compare the 2^n lattice points nearest the origin with the continuous ball.
    LatticeCheck {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
    },
    /// Check a sequence file for distinct subset sums; exit 1 on a collision.
    Verify { path: PathBuf },
    /// Find the smallest M admitting a sequence of n vectors in [0, M]^k.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// E‖X‖_p^p for X = Σ ε_i a_i with independent ε_i = ±1/2.
    Moments {
        path: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Audit every lower bound against the searched M_min; exit 1 on a violation.
    Report {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

/// What a successful computation says about the property under test.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Holds,
    Refuted,
    /// Result printed, but it is partial because a budget ran out.
    Partial,
}

enum Failure {
    Lib(sumbridge::Error),
    Input(String),
}

impl From<sumbridge::Error> for Failure {
    fn from(e: sumbridge::Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_sequence(path: &Path) -> Result<VectorSequence, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn run(cli: &Cli) -> Result<(String, Status), Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    let out = match &cli.command {
        &Command::Bounds { n, k } => {
            let reports = Method::ALL
                .iter()
                .map(|&m| lower_bound_m::<f64>(n, k, m))
                .collect::<Result<Vec<_>, _>>()?;
            (render::bounds(&reports, fmt(Format::Text)), Status::Holds)
        }
        &Command::Crossover { k_min, k_max } => {
            let rows = crossover_table::<f64>(k_min, k_max)?;
            (render::crossover(&rows, fmt(Format::Csv)), Status::Holds)
        }
        &Command::LatticeCheck { n, k, p } => {
            let budget = cli.budget.unwrap_or(DEFAULT_LATTICE_BUDGET);
            let summary = lattice_shell_enumerate::<f64>(n, k, p, budget)?;
            (render::lattice(&summary, fmt(Format::Json)), Status::Holds)
        }
        Command::Verify { path } => {
            let seq = read_sequence(path)?;
            let verdict = verify_distinct(&seq)?;
            let status = if verdict.is_distinct() { Status::Holds } else { Status::Refuted };
            (render::verdict(&seq, &verdict, fmt(Format::Text)), status)
        }
        &Command::Search { n, k } => {
            let outcome = min_m_search(n, k, cli.budget.unwrap_or(DEFAULT_SEARCH_BUDGET))?;
            let status = if outcome.exhaustive { Status::Holds } else { Status::Partial };
            (render::search(&outcome, fmt(Format::Text)), status)
        }
        Command::Moments { path, p, mode, samples } => {
            let seq = read_sequence(path)?;
            let value = match mode {
                Mode::Exact => {
                    if p.fract() != 0.0 || *p < 1.0 || *p > f64::from(u32::MAX) {
                        return Err(Failure::Input(format!(
                            "exact moments need an integer p >= 1, got {p}; use --mode mc"
                        )));
                    }
                    exact_moment_with_budget(&seq, *p as u32, cli.budget.unwrap_or(DEFAULT_TABLE_BUDGET))?
                }
                Mode::Mc => mc_estimate::<f64>(&seq, *p, *samples, cli.seed)?,
            };
            (render::moment(&value, fmt(Format::Text)), Status::Holds)
        }
        &Command::Report { n, k } => {
            let audit = bound_vs_search_report(n, k, cli.budget.unwrap_or(DEFAULT_SEARCH_BUDGET))?;
            let status = if audit.violations().next().is_some() {
                Status::Refuted
            } else if !audit.exhaustive {
                Status::Partial
            } else {
                Status::Holds
            };
            (render::audit(&audit, fmt(Format::Text)), status)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, status)) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            match status {
                Status::Holds => ExitCode::SUCCESS,
                Status::Refuted => ExitCode::from(1),
                Status::Partial => {
                    eprintln!("warning: search budget exhausted; result is not exhaustive");
                    ExitCode::from(3)
                }
            }
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 3 } else { 2 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
