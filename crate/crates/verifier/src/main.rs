use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use octoweak::config::SEED_ENV;
use octoweak::{dump_table, run_all, ConfigLayer, HarnessError, SuiteConfig, SuiteId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Runs the octonionic weak-sector verification suites.
#[derive(Debug, Parser)]
#[command(name = "octoweak", version)]
struct Cli {
    /// Flat `key = value` config file; flags override it
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Draw count for every sampled suite
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    #[arg(long, value_name = "X")]
    tol_exact: Option<f64>,
    #[arg(long, value_name = "X")]
    tol_series: Option<f64>,
    #[arg(long, value_name = "X")]
    theta_bound: Option<f64>,
    #[arg(long, value_name = "N")]
    field_degree: Option<u32>,
    /// Suite to run (repeatable); defaults to all
    #[arg(long = "suite", value_name = "ID")]
    suites: Vec<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Include per-suite wall time in the report
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    list_suites: bool,
    /// Print the basis multiplication table
    #[arg(long)]
    dump_table: bool,
}

impl Cli {
    fn layer(&self) -> Result<ConfigLayer, HarnessError> {
        let suites = if self.suites.is_empty() {
            None
        } else {
            Some(
                self.suites
                    .iter()
                    .map(|s| s.parse::<SuiteId>())
                    .collect::<Result<Vec<_>, _>>()?,
            )
        };
        Ok(ConfigLayer {
            seed: self.seed,
            samples_per_suite: self.samples,
            tol_exact: self.tol_exact,
            tol_series: self.tol_series,
            theta_bound: self.theta_bound,
            field_degree: self.field_degree,
            suites,
        })
    }
}

fn read(path: &PathBuf) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.clone(),
        source,
    })
}

fn run(cli: &Cli) -> Result<bool, HarnessError> {
    if cli.list_suites {
        for id in SuiteId::ALL {
            println!("{:<20} {}", id.as_str(), id.description());
        }
        return Ok(true);
    }
    if cli.dump_table {
        print!("{}", dump_table());
        return Ok(true);
    }

    let file = cli
        .config
        .as_ref()
        .map(|p| read(p).and_then(|text| ConfigLayer::parse(&text)))
        .transpose()?;
    let env_seed = std::env::var(SEED_ENV).ok();
    let cfg = SuiteConfig::resolve(file.as_ref(), &cli.layer()?, env_seed.as_deref())?;

    let report = run_all(&cfg)?;
    let rendered = match cli.report {
        ReportFormat::Text => report.to_text(cli.timings),
        ReportFormat::Json => report.to_json(cli.timings),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        })?,
        None => print!("{rendered}"),
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("octoweak: {e}");
            ExitCode::from(2)
        }
    }
}
