//! `ulrich`: verification suites, invariant tables, non-existence
//! certificates and positivity scans from the command line.

mod commands;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use ulrich_core::CIConfig;

use commands::{Outcome, ScanArgs, Suite, UsageError, VerifyArgs};
use range::IntRange;

/// Version of the structured output layout; see `docs/output-schema.md`.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "ulrich", version, about = "Exact Ulrich-bundle arithmetic on complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for parallel steps.
    #[arg(long, global = true, env = "ULRICH_WORKERS", value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the polynomial identities.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Number of equations, `a..b` or `a`.
        #[arg(long)]
        s: Option<IntRange>,
        /// Largest `s` for the positivity scan.
        #[arg(long)]
        s_max: Option<i64>,
        /// Largest degree for the positivity scan.
        #[arg(long, default_value_t = 6)]
        d_max: i64,
        /// Random symmetric polynomials per `s` for the expansion cross-check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the numerical invariants of `X`, `E` and `Z`.
    Invariants {
        #[arg(long)]
        n: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        r: i64,
        /// Twists for the Euler characteristic table (default `-n..n`).
        #[arg(long, allow_hyphen_values = true)]
        m: Option<IntRange>,
    },
    /// Decide (non-)existence of rank `r` Ulrich bundles.
    Certify {
        #[arg(long, required_unless_present = "batch")]
        n: Option<i64>,
        #[arg(long, value_delimiter = ',', required_unless_present = "batch")]
        degrees: Vec<i64>,
        #[arg(long, required_unless_present = "batch")]
        r: Option<i64>,
        /// Pad the degrees with 1's to at least this many equations.
        #[arg(long, default_value_t = 4)]
        pad: usize,
        /// JSON file holding an array of `{"n", "degrees", "r"}` objects.
        #[arg(long, conflicts_with_all = ["n", "degrees", "r"])]
        batch: Option<PathBuf>,
    },
    /// Resolution data and the rank-2 dimension count for a hypersurface.
    Hypersurface {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Exhaustive positivity scan of `q_{s,b}`.
    Scan {
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long)]
        s_max: usize,
        #[arg(long)]
        d_max: i64,
        #[arg(long, value_delimiter = ',', default_value = "8,9")]
        b: Vec<i64>,
        /// Print every tuple with its value.
        #[arg(long)]
        list: bool,
    },
}

fn config(n: i64, degrees: Vec<i64>, r: i64) -> Result<CIConfig, UsageError> {
    Ok(CIConfig::new(n, degrees, r)?)
}

fn run(cli: &Cli) -> Result<(&'static str, Outcome), UsageError> {
    Ok(match &cli.command {
        Command::Verify { suite, s, s_max, d_max, samples, seed } => {
            let args = VerifyArgs {
                suite: *suite,
                s: *s,
                s_max: *s_max,
                d_max: *d_max,
                samples: *samples,
                seed: *seed,
            };
            ("verify", commands::verify(&args)?)
        }
        Command::Invariants { n, degrees, r, m } => {
            ("invariants", commands::invariants(&config(*n, degrees.clone(), *r)?, *m)?)
        }
        Command::Certify { batch: Some(path), .. } => {
            let text =
                std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let cfgs: Vec<CIConfig> = serde_json::from_str(&text)?;
            ("certify", commands::certify_batch(&cfgs)?)
        }
        Command::Certify { n, degrees, r, pad, batch: None } => {
            let cfg = config(n.unwrap_or_default(), degrees.clone(), r.unwrap_or_default())?;
            ("certify", commands::certify(&cfg, *pad)?)
        }
        Command::Hypersurface { n, d } => ("hypersurface", commands::hypersurface(*n, *d)?),
        Command::Scan { s_min, s_max, d_max, b, list } => {
            let args = ScanArgs { s_min: *s_min, s_max: *s_max, d_max: *d_max, bs: b.clone(), list: *list };
            ("scan", commands::scan(&args)?)
        }
    })
}

fn emit(cli: &Cli, body: String) -> ExitCode {
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        pool = pool.num_threads(w as usize);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    match pool.install(|| run(&cli)) {
        Ok((command, outcome)) => {
            let body = match cli.format {
                Format::Text => outcome.text,
                Format::Json => {
                    let doc = json!({
                        "schema_version": SCHEMA_VERSION,
                        "tool_version": env!("CARGO_PKG_VERSION"),
                        "command": command,
                        "exit_code": outcome.exit,
                        "result": outcome.result,
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
            };
            if emit(&cli, body) != ExitCode::SUCCESS {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit)
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            if cli.format == Format::Json {
                let doc = json!({ "schema_version": SCHEMA_VERSION, "error": msg, "exit_code": 2 });
                emit(&cli, serde_json::to_string_pretty(&doc).expect("serializable") + "\n");
            }
            ExitCode::from(2)
        }
    }
}
