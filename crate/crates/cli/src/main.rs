use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use ncmaxwell::fuzz::identity_fuzz;
use ncmaxwell::scenario::{classical_limit, run_verification, Model, Scenario};

/// Exact verification of deformed Maxwell equations.
#[derive(Parser)]
#[command(name = "ncmaxwell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Single,
    Dual,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Single => Model::Single,
            ModelArg::Dual => Model::Dual,
        }
    }
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in one or more scenario files.
    Verify {
        #[arg(long, required = true, num_args = 1..)]
        scenario: Vec<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Randomized exact identity checks.
    Fuzz {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Re-run a scenario with theta = 0 and compare with classical Maxwell theory.
    Limit {
        #[arg(long)]
        scenario: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

fn emit<T: Serialize>(value: &T, output: &Output) -> Result<()> {
    let mut text = if output.pretty { serde_json::to_string_pretty(value)? } else { serde_json::to_string(value)? };
    text.push('\n');
    match &output.report {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Scenario> {
    Scenario::load(path).with_context(|| format!("loading {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { scenario, output } => {
            let reports = scenario
                .par_iter()
                .map(|path| {
                    let s = load(path)?;
                    run_verification(&s).with_context(|| format!("verifying {}", path.display()))
                })
                .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.all_passed);
            for r in &reports {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    eprintln!("FAIL {} / {}: {}", r.scenario.name.as_deref().unwrap_or("?"), c.name, c.detail);
                }
            }
            if let [single] = reports.as_slice() {
                emit(single, &output)?;
            } else {
                emit(&reports, &output)?;
            }
            Ok(passed)
        }
        Command::Fuzz { model, seed, trials, max_degree, output } => {
            let report = identity_fuzz(model.into(), seed, trials, max_degree);
            for i in report.identities.iter().filter(|i| !i.passed) {
                eprintln!("FAIL {}: {}", i.name, i.example.as_deref().unwrap_or("no witness found"));
            }
            emit(&report, &output)?;
            Ok(report.all_passed)
        }
        Command::Limit { scenario, output } => {
            let report = classical_limit(&load(&scenario)?)?;
            emit(&report, &output)?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
