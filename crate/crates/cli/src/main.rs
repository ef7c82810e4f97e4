use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use qdouble::config::parse_parts;
use qdouble::{run_suite, Mode, SuiteConfig, EXIT_CONFIG};

/// Verify quantum-double identities and write a JSON report.
#[derive(Parser, Debug)]
#[command(name = "qdouble", version)]
struct Cli {
    /// Suite to run, or `all` for the default grid.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Dimension N of the braiding.
    #[arg(long)]
    n: Option<usize>,
    /// Tensor degree k.
    #[arg(long)]
    k: Option<usize>,
    /// Partition for the spectrum suite, e.g. `2,1`.
    #[arg(long)]
    lambda: Option<String>,
    /// Monomial degree bound.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Number of sample points in sampled mode.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include per-check wall times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

fn config(cli: &Cli) -> Result<SuiteConfig, String> {
    let mut cfg = SuiteConfig::new(cli.suite.clone(), cli.mode);
    cfg.n = cli.n;
    cfg.k = cli.k;
    cfg.lambda = cli
        .lambda
        .as_deref()
        .map(parse_parts)
        .transpose()
        .map_err(|e| e.to_string())?;
    cfg.degree = cli.degree;
    cfg.samples = cli.samples;
    cfg.seed = cli.seed;
    cfg.jobs = cli.jobs;
    cfg.timings = cli.timings;
    Ok(cfg)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n\nRun `qdouble --help` for usage.");
    ExitCode::from(EXIT_CONFIG as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let cfg = match config(&cli) {
        Ok(c) => c,
        Err(msg) => return usage_error(&msg),
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.0),
    };
    let json = report.to_json();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{json}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
