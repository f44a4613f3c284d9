//! Batch CLI: analyze job files, replay the built-in examples, or check a
//! single statement. Exit codes: 0 success, 1 input error, 2 computation
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hilbco::analysis::StatementId;
use hilbco::job::{
    exit_code_for, preset, preset_names, render_text, run_job, to_canonical_json, verdict_rows,
    JobSpec, Report,
};

#[derive(Parser)]
#[command(
    name = "hilbco",
    version,
    about = "Hilbert coefficients of m-primary ideals and Cohen-Macaulayness checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct Overrides {
    /// Table length N (number of powers of Q to tabulate)
    #[arg(long = "N", value_name = "k")]
    n_max: Option<usize>,
    /// Stabilization window width
    #[arg(long)]
    window: Option<usize>,
    /// Enumeration bound for semigroup lengths
    #[arg(long)]
    semigroup_bound: Option<u64>,
}

impl Overrides {
    fn apply(&self, spec: &mut JobSpec) {
        if self.n_max.is_some() {
            spec.options.n_max = self.n_max;
        }
        if self.window.is_some() {
            spec.options.window = self.window;
        }
        if self.semigroup_bound.is_some() {
            spec.options.semigroup_bound = self.semigroup_bound;
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a job file and print the report
    Analyze {
        /// Path to a JSON job description
        spec: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
        /// Assert depth R = d-1 to enable the strict inequalities
        #[arg(long = "depth-flag", value_name = "d-1")]
        depth_flag: Option<String>,
        /// Include the raw length tables in the report
        #[arg(long)]
        full: bool,
        /// Emit the canonical JSON report
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the plain-text report (default)
        #[arg(long)]
        text: bool,
    },
    /// List or run the built-in examples
    Examples {
        /// List the preset names
        #[arg(long, conflicts_with = "run")]
        list: bool,
        /// Run one preset by name
        #[arg(long, value_name = "name")]
        run: Option<String>,
        /// Require the reduction-recurrence route and print its values
        #[arg(long)]
        huneke: bool,
        /// Include the raw length tables in the report
        #[arg(long)]
        full: bool,
        /// Emit the canonical JSON report
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the plain-text report (default)
        #[arg(long)]
        text: bool,
    },
    /// Evaluate a single statement on a job file
    Check {
        /// Path to a JSON job description
        spec: PathBuf,
        /// Statement id, e.g. THM-c
        #[arg(long)]
        statement: String,
        #[command(flatten)]
        overrides: Overrides,
    },
}

fn load_spec(path: &PathBuf) -> Result<JobSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("invalid job file {}: {e}", path.display()))
}

fn emit(report: &Report, json: bool) -> Result<(), i32> {
    if json {
        match to_canonical_json(report) {
            Ok(s) => print!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return Err(exit_code_for(&e));
            }
        }
    } else {
        print!("{}", render_text(report));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(code) => code,
    };
    ExitCode::from(code as u8)
}

fn run(cli: Cli) -> Result<(), i32> {
    match cli.command {
        Command::Analyze {
            spec,
            overrides,
            depth_flag,
            full,
            json,
            text: _,
        } => {
            let mut spec = load_spec(&spec).map_err(|e| {
                eprintln!("error: {e}");
                1
            })?;
            overrides.apply(&mut spec);
            if depth_flag.is_some() {
                spec.options.depth_flag = depth_flag;
            }
            let report = run_job(&spec, full).map_err(|e| {
                eprintln!("error: {e}");
                exit_code_for(&e)
            })?;
            emit(&report, json)
        }
        Command::Examples {
            list,
            run: run_name,
            huneke,
            full,
            json,
            text: _,
        } => {
            if list || run_name.is_none() {
                for name in preset_names() {
                    println!("{name}");
                }
                return Ok(());
            }
            let name = run_name.expect("checked above");
            let spec = preset(&name).ok_or_else(|| {
                eprintln!(
                    "error: unknown example {name:?}; available: {}",
                    preset_names().join(", ")
                );
                1
            })?;
            if huneke && spec.j.is_none() {
                eprintln!("error: example {name:?} has no reduction J for the recurrence route");
                return Err(1);
            }
            let report = run_job(&spec, full).map_err(|e| {
                eprintln!("error: {e}");
                exit_code_for(&e)
            })?;
            if huneke {
                let section = report.huneke.as_ref().expect("J implies the section");
                println!(
                    "recurrence route: g1 = {}, g2 = {}, matches fitted coefficients: {}",
                    section.g1, section.g2, section.matches_fit
                );
            }
            emit(&report, json)
        }
        Command::Check {
            spec,
            statement,
            overrides,
        } => {
            let id: StatementId = statement.parse().map_err(|e| {
                eprintln!("error: {e}");
                1
            })?;
            let mut spec = load_spec(&spec).map_err(|e| {
                eprintln!("error: {e}");
                1
            })?;
            overrides.apply(&mut spec);
            let report = run_job(&spec, false).map_err(|e| {
                eprintln!("error: {e}");
                exit_code_for(&e)
            })?;
            let rows = verdict_rows(&report, id);
            if rows.is_empty() {
                let reason = report
                    .skipped
                    .iter()
                    .find(|s| s.id == id.as_str())
                    .map(|s| s.reason.clone())
                    .unwrap_or_else(|| "not applicable to this instance".to_string());
                eprintln!("error: statement {id} was not evaluated: {reason}");
                return Err(2);
            }
            for row in rows {
                let status = if row.holds { "holds" } else { "FAILS" };
                let note = row
                    .note
                    .as_ref()
                    .map(|n| format!("  [{n}]"))
                    .unwrap_or_default();
                println!(
                    "{}: {} {} {}  {status}{note}",
                    row.id, row.lhs, row.relation, row.rhs
                );
            }
            Ok(())
        }
    }
}
