use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eub_cli::config::ScenarioConfig;
use eub_cli::engine::{run_sweep, run_trace, EngineError};
use eub_cli::output::csv_string;
use eub_core::verification::run_suite;

/// Uncertainty-bound dynamics of a two-qubit probe coupled to a DM-XY spin
/// chain: single trajectories, parameter sweeps, and a verification suite.
#[derive(Parser)]
#[command(name = "eub", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one trajectory and write it as CSV.
    Trace {
        /// JSON scenario; defaults apply to every missing field, so the flag
        /// may be omitted for the reference scenario.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate one trajectory per sweep value, one CSV file per value.
    Sweep {
        /// JSON scenario with a `sweep` block.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Directory for `<parameter>_<value>.csv` files.
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Run the oracle suite and emit the JSON report.
    Verify {
        /// RNG seed for the random-case sweep.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random cases.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_CONFIG_ERROR: u8 = 2;

fn load_config(path: &Option<PathBuf>) -> Result<ScenarioConfig, String> {
    match path {
        None => Ok(ScenarioConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| format!("config error: {}: {e}", p.display()))?;
            ScenarioConfig::from_json(&text).map_err(|e| e.to_string())
        }
    }
}

fn engine_failure(e: EngineError) -> String {
    e.to_string()
}

fn cmd_trace(config: &Option<PathBuf>, out: &Path) -> Result<(), String> {
    let cfg = load_config(config)?;
    let rows = run_trace(&cfg).map_err(engine_failure)?;
    fs::write(out, csv_string(&rows)).map_err(|e| format!("config error: {}: {e}", out.display()))
}

fn cmd_sweep(config: &Option<PathBuf>, out_dir: &Path) -> Result<(), String> {
    let cfg = load_config(config)?;
    let traces = run_sweep(&cfg).map_err(engine_failure)?;
    fs::create_dir_all(out_dir)
        .map_err(|e| format!("config error: {}: {e}", out_dir.display()))?;
    for trace in &traces {
        let path = out_dir.join(format!("{}.csv", trace.file_stem()));
        fs::write(&path, csv_string(&trace.rows))
            .map_err(|e| format!("config error: {}: {e}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn cmd_verify(seed: u64, cases: usize, out: &Option<PathBuf>) -> Result<bool, String> {
    if cases == 0 {
        return Err("config error: cases: needs at least 1".to_string());
    }
    let report = run_suite(seed, cases);
    let json = report.to_json();
    match out {
        Some(path) => fs::write(path, &json)
            .map_err(|e| format!("config error: {}: {e}", path.display()))?,
        None => print!("{json}"),
    }
    if !report.all_pass {
        for failure in report.failures() {
            eprintln!(
                "FAIL {} {}: |{} - {}| = {:e}",
                failure.case_id, failure.quantity, failure.closed_form, failure.oracle,
                failure.abs_diff
            );
        }
    }
    Ok(report.all_pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Trace { config, out } => cmd_trace(config, out).map(|()| true),
        Command::Sweep { config, out_dir } => cmd_sweep(config, out_dir).map(|()| true),
        Command::Verify { seed, cases, out } => cmd_verify(*seed, *cases, out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFICATION_FAILURE),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(EXIT_CONFIG_ERROR)
        }
    }
}
