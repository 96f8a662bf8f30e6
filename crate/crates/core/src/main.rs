//! Command-line driver: runs verification suites and writes a report.

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use skein_coulomb::params::Mode;
use skein_coulomb::report::{Report, VariantFilter};
use skein_coulomb::theoremsuite::{run_suite, SuiteConfig, SUITES};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(version, about = "Exact verification of skein, spherical DAHA and Coulomb branch identities")]
struct Cli {
    /// Suite to run, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Gamma family range N: checks cover |n| <= N.
    #[arg(long, default_value_t = 5)]
    gamma_range: u32,
    /// Highest n of X^n + X^-n used by basis agreement checks.
    #[arg(long, default_value_t = 12)]
    basis_depth: u32,
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,
    /// Seed for random-mode parameter values.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Record wall-clock time per check (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Which readings of corrected statements to include.
    #[arg(long, value_enum, default_value_t = VariantFilter::All)]
    variant: VariantFilter,
}

#[derive(Serialize)]
struct ReportConfig<'a> {
    suite: &'a str,
    #[serde(flatten)]
    suite_config: &'a SuiteConfig,
    variant: VariantFilter,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = SuiteConfig {
        gamma_range: cli.gamma_range,
        basis_depth: cli.basis_depth,
        mode: cli.mode,
        seed: cli.seed,
        timing: cli.timing,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {}", e);
        return ExitCode::from(2);
    }
    let names: Vec<&str> = if cli.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&cli.suite.as_str()) {
        vec![cli.suite.as_str()]
    } else {
        eprintln!("error: unknown suite `{}` (expected one of: {}, all)", cli.suite, SUITES.join(", "));
        return ExitCode::from(2);
    };
    let start = Instant::now();
    // par_iter keeps input order in the collected vector
    let suites: Result<Vec<_>, _> = names.par_iter().map(|n| run_suite(n, &cfg)).collect();
    let mut suites = match suites {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    for s in &mut suites {
        s.retain(cli.variant);
    }
    let millis = if cli.timing { start.elapsed().as_millis() as u64 } else { 0 };
    let config = ReportConfig { suite: &cli.suite, suite_config: &cfg, variant: cli.variant };
    let report = Report::new(config, suites, millis);
    let text = match cli.report {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return ExitCode::from(2);
            }
        }
        None => print!("{}", text),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
