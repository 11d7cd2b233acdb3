//! Command-line front end for the check suite:
//!
//! - `check <names...|all>` runs the selected checks and renders a
//!   text or JSON report, to stdout or to a file;
//! - `list` prints every registered check with its summary;
//! - exit codes: 0 all selected checks passed, 1 at least one check
//!   failed, 2 a requested check name is not registered, 3 the
//!   substitution-table preflight found an internal inconsistency;
//! - `RS_VERIFY_THREADS` caps the number of worker threads;
//! - reports with the same configuration and seed are byte-identical
//!   apart from the elapsed-time fields.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rs_verify_core::subst::{gl4_entries, run_split_audit, verify_table, verify_tables};
use rs_verify_core::suite::{find, registry, run_selected, Check, RunCtx, SuiteReport};

#[derive(Parser)]
#[command(name = "rs-verify", version, about = "Exact verification of the local series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the named checks, or all of them.
    Check {
        /// Registered check names, or the single word `all`.
        #[arg(required = true)]
        names: Vec<String>,
        /// Override the series truncation window.
        #[arg(long)]
        degree: Option<u32>,
        /// Override the number of sampled trials.
        #[arg(long)]
        trials: Option<u32>,
        /// Root seed for the per-check sample streams.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Bound on sampled numerators and denominators.
        #[arg(long, default_value_t = 20)]
        q_bound: i64,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Deliberately break one stage to demonstrate the failure
        /// paths end to end.
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// List the registered checks.
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fault {
    /// Perturb one side of every comparison.
    Comparator,
    /// Corrupt a substitution-table entry so the preflight rejects it.
    SubstTable,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            let checks = registry();
            let width = checks.iter().map(|c| c.name().len()).max().unwrap_or(0);
            for c in &checks {
                println!("{:width$}  {}", c.name(), c.summary());
            }
            ExitCode::SUCCESS
        }
        Command::Check {
            names,
            degree,
            trials,
            seed,
            q_bound,
            format,
            output,
            inject_fault,
        } => run_checks(
            &names,
            RunCtx {
                degree,
                trials,
                seed,
                q_bound,
                tamper: inject_fault == Some(Fault::Comparator),
            },
            format,
            output,
            inject_fault,
        ),
    }
}

fn run_checks(
    names: &[String],
    ctx: RunCtx,
    format: Format,
    output: Option<PathBuf>,
    inject_fault: Option<Fault>,
) -> ExitCode {
    // Preflight: the substitution tables must reproduce their claimed
    // arguments before any series identity is trusted to use them.
    if inject_fault == Some(Fault::SubstTable) {
        let mut corrupted = gl4_entries();
        corrupted[0].mono[0].1 += 1;
        let err = verify_table("three-variable", &corrupted)
            .expect_err("a corrupted entry must be rejected");
        eprintln!("internal inconsistency: {err}");
        return ExitCode::from(3);
    }
    if let Err(err) = verify_tables() {
        eprintln!("internal inconsistency: {err}");
        return ExitCode::from(3);
    }
    if let Err(err) = run_split_audit() {
        eprintln!("internal inconsistency: {err}");
        return ExitCode::from(3);
    }

    let selected: Vec<Box<dyn Check>> = if names.len() == 1 && names[0] == "all" {
        registry()
    } else {
        let mut picked = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for name in names {
            if name == "all" {
                eprintln!("`all` cannot be combined with individual check names");
                return ExitCode::from(2);
            }
            if !seen.insert(name.clone()) {
                continue;
            }
            match find(name) {
                Some(c) => picked.push(c),
                None => {
                    eprintln!("unknown check: {name} (run `rs-verify list` for the registry)");
                    return ExitCode::from(2);
                }
            }
        }
        picked
    };

    let reports = run_selected(&selected, &ctx);
    let report = SuiteReport::new(ctx.seed, reports);
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json())
                .expect("report serializes");
            s.push('\n');
            s
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{rendered}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
