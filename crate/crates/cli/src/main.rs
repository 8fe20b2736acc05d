use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use triboson_cli::document::{analyze, canonicalize_document, render_text};
use triboson_cli::input::read_input;
use triboson_cli::sweep::{sweep, write_csv, FigureId};
use triboson_cli::{audit, CliError};
use triboson_core::DEFAULT_EPSILON;

#[derive(Parser)]
#[command(
    name = "triboson",
    version,
    about = "Entanglement and squeezing of three bosons in two modes"
)]
struct Cli {
    /// Zero threshold for entanglement classification.
    #[arg(long, global = true, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    /// Suppress progress and summary messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Worker threads for sweeps and audits (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form, class, entanglement measures and squeezing of one state.
    Analyze {
        /// JSON state file, or `-` for stdin.
        #[arg(long = "in")]
        input: String,
        /// Emit the full JSON document instead of a text summary.
        #[arg(long)]
        json: bool,
    },
    /// Standard-form parameters and the transform that produces them.
    Canonicalize {
        #[arg(long = "in")]
        input: String,
    },
    /// Write the CSV data behind one figure, plus a JSON sidecar.
    Sweep {
        #[arg(long, value_enum)]
        figure: FigureId,
        /// Points per axis (default 401 for curves, 201 for surfaces).
        #[arg(long)]
        resolution: Option<usize>,
        /// Output CSV path, or `-` for stdout (no sidecar).
        #[arg(long)]
        out: String,
    },
    /// Cross-check closed forms against oracles on seeded random states.
    Audit {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
}

fn sidecar_path(out: &Path) -> PathBuf {
    out.with_extension("json")
}

fn write_to(
    path: &str,
    contents: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    if path == "-" {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        contents(&mut lock)?;
        lock.flush()?;
    } else {
        let mut w = BufWriter::new(File::create(path)?);
        contents(&mut w)?;
        w.flush()?;
    }
    Ok(())
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), CliError> {
    if !(cli.epsilon > 0.0) {
        return Err(CliError::Input(format!(
            "epsilon must be positive, got {}",
            cli.epsilon
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    match cli.command {
        Command::Analyze { input, json } => {
            let state = read_input(&input)?.to_state()?;
            let doc = analyze(&state, cli.epsilon)?;
            let text = if json {
                json_line(&doc)
            } else {
                render_text(&doc)
            };
            print!("{text}");
        }
        Command::Canonicalize { input } => {
            let state = read_input(&input)?.to_state()?;
            print!(
                "{}",
                json_line(&canonicalize_document(&state, cli.epsilon)?)
            );
        }
        Command::Sweep {
            figure,
            resolution,
            out,
        } => {
            let table = pool.install(|| sweep(figure, resolution))?;
            write_to(&out, |w| write_csv(&table, w))?;
            if out != "-" {
                let meta = json_line(&table.meta);
                std::fs::write(sidecar_path(Path::new(&out)), meta)?;
            }
            if !cli.quiet {
                eprintln!("{:?}: {} rows written to {out}", figure, table.rows.len());
            }
        }
        Command::Audit { trials, seed, out } => {
            let report = pool.install(|| audit::audit(trials, seed))?;
            write_to(&out, |w| {
                Ok(w.write_all(audit::to_json(&report).as_bytes())?)
            })?;
            if !cli.quiet {
                eprintln!(
                    "audit: {} trials, {} violations, {} concurrence discrepancies",
                    report.trial_count, report.violation_count, report.discrepancy_count
                );
            }
            if !report.passed {
                return Err(CliError::Invariant(format!(
                    "{} audit checks failed",
                    report.violation_count
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
