//! Command-line interface: build standard posets, run curvature checks,
//! and emit machine-readable reports.
//!
//! The process exit code reflects operational success only. A `NotCat0`
//! verdict on a well-formed input is a completed run and exits 0; bad
//! arguments, unreadable files and invalid posets exit nonzero.

use clap::{Args, Parser, Subcommand};
use orthocurve::poset::GradedPoset;
use orthocurve::report::{execute_checks, Check, FamilySpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "orthocurve",
    about = "CAT(0) tests for orthoscheme complexes of graded posets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family to construct: boolean, partition, ncp, subspace or ncw
    #[arg(long)]
    family: Option<String>,
    /// Size parameter (ground-set size or ambient dimension)
    #[arg(long)]
    n: Option<usize>,
    /// Field size for the subspace family (2 or 3)
    #[arg(long)]
    q: Option<u32>,
    /// Coxeter type for the ncw family: A1-A5, B2-B5, D3-D5, F4 or H4
    #[arg(long = "type")]
    ctype: Option<String>,
}

impl FamilyArgs {
    fn build(&self) -> Result<GradedPoset, String> {
        let family = self
            .family
            .as_deref()
            .ok_or("either --family or --input is required")?;
        let spec = FamilySpec::from_args(family, self.n, self.q, self.ctype.as_deref())
            .map_err(|e| e.to_string())?;
        spec.build().map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a poset and write it as JSON
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run checks against one poset and print a report
    Check {
        /// Poset JSON file produced by `build` (alternative to --family)
        #[arg(long, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated checks: validate,lattice,modular,spindles,cat0
        #[arg(long, default_value = "validate,lattice,cat0")]
        checks: String,
        /// Girth bound for the spindles check (defaults to the provable cutoff)
        #[arg(long)]
        max_girth: Option<usize>,
        /// Emit the full JSON report instead of the summary lines
        #[arg(long)]
        json: bool,
    },
    /// Run the same checks over several inputs, one report per line
    Report {
        /// Poset JSON files
        inputs: Vec<PathBuf>,
        /// Comma-separated checks: validate,lattice,modular,spindles,cat0
        #[arg(long, default_value = "validate,lattice,cat0")]
        checks: String,
        /// Girth bound for the spindles check (defaults to the provable cutoff)
        #[arg(long)]
        max_girth: Option<usize>,
        /// Emit compact JSON reports (one per line) instead of summaries
        #[arg(long)]
        json: bool,
    },
}

fn load_poset(path: &PathBuf) -> Result<GradedPoset, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    GradedPoset::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build { family, output } => {
            let poset = family.build()?;
            let json = poset.to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, json).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => println!("{json}"),
            }
        }
        Command::Check {
            input,
            family,
            checks,
            max_girth,
            json,
        } => {
            let poset = match input {
                Some(path) => load_poset(&path)?,
                None => family.build()?,
            };
            let checks = Check::parse_list(&checks).map_err(|e| e.to_string())?;
            let report = execute_checks(&poset, &checks, max_girth);
            if json {
                println!("{}", report.to_json());
            } else {
                for line in report.summary_lines() {
                    println!("{line}");
                }
            }
        }
        Command::Report {
            inputs,
            checks,
            max_girth,
            json,
        } => {
            if inputs.is_empty() {
                return Err("report requires at least one input file".into());
            }
            let checks = Check::parse_list(&checks).map_err(|e| e.to_string())?;
            for path in &inputs {
                let poset = load_poset(path)?;
                let report = execute_checks(&poset, &checks, max_girth);
                if json {
                    println!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    );
                } else {
                    for line in report.summary_lines() {
                        println!("{line}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
