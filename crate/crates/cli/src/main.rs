//! Command-line front end: scenario verification, the counterexample
//! gallery, and seeded fuzzing.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 for
//! input or evaluation errors (unreadable files, invalid scenarios, or exact
//! mode hitting an irrational euclidean norm).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vecdens_core::checks::RunOptions;
use vecdens_core::scenario::{Report, Scenario};

#[derive(Parser)]
#[command(name = "vecdens", version, about = "Exact vector-measure verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks requested by a scenario file.
    Verify {
        /// Path to a scenario JSON file.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Evaluate irrational euclidean norms in f64 (tolerance 1e-9).
        #[arg(long)]
        approx: bool,
        /// Seed for the dual-ball samplers.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dual-ball samples per soundness comparison.
        #[arg(long, default_value_t = 24)]
        samples: usize,
    },
    /// Run the built-in counterexample gallery, or one named entry.
    Gallery {
        /// Entry name; all entries when omitted.
        name: Option<String>,
        /// List entry names and summaries instead of running.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate random scenarios and run the full check suite on each.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Evaluate irrational euclidean norms in f64 (tolerance 1e-9).
        #[arg(long)]
        approx: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { file, format, approx, seed, samples } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let scenario: Scenario =
                serde_json::from_str(&text).map_err(|e| format!("invalid scenario: {e}"))?;
            let built = scenario.build().map_err(|e| format!("invalid scenario: {e}"))?;
            let opts = RunOptions { seed, dual_samples: samples, approx };
            let report =
                vecdens_core::run_scenario(&built, &opts).map_err(|e| e.to_string())?;
            Ok(emit(&report, format))
        }
        Command::Gallery { name, list, format, seed } => {
            if list {
                for entry in vecdens_core::gallery() {
                    println!("{:<28} {}", entry.name, entry.summary);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let opts = RunOptions { seed, ..RunOptions::default() };
            let report = vecdens_core::run_gallery(name.as_deref(), &opts)
                .map_err(|e| e.to_string())?;
            Ok(emit(&report, format))
        }
        Command::Fuzz { seed, cases, format, approx } => {
            let report = vecdens_core::fuzz(seed, cases, approx).map_err(|e| e.to_string())?;
            Ok(emit(&report, format))
        }
    }
}

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
