//! Command-line front end: every computation of `crofton-core` as a
//! subcommand emitting a versioned JSON or CSV report.
//!
//! Output is a pure function of the parsed arguments (and of `--seed` for
//! Monte Carlo commands), so reruns are byte-identical.

mod commands;
mod output;

use std::collections::BTreeMap;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::Value;

pub use commands::Command;

/// Version of the report layout; bumped on any change to field names.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "crofton", version, about = "Selberg-type integrals, Grassmannian spectra and Crofton certificates")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Significant digits for floating-point values.
    #[arg(long, global = true, env = "CROFTON_PRECISION", default_value_t = 12)]
    pub precision: usize,
    /// Worker threads for Monte Carlo commands; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Everything that determines a run's output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub output_format: OutputFormat,
    pub precision: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Box<dyn std::error::Error + Send + Sync>),
}

impl CliError {
    pub(crate) fn compute<E: std::error::Error + Send + Sync + 'static>(e: E) -> Self {
        CliError::Compute(Box::new(e))
    }
}

/// A command result before serialization.
pub struct Report {
    pub result: Value,
    /// `Some(reason)` when a certification failed.
    pub failure: Option<String>,
}

/// Exit code and text of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        let (name, parameters) = self.command.parameters();
        RunConfig {
            command: name,
            seed: parameters.get("seed").and_then(Value::as_u64),
            samples: parameters.get("samples").and_then(Value::as_u64),
            parameters,
            output_format: self.format,
            precision: self.precision,
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let config = cli.config();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers.max(1)).build() {
        Ok(p) => p,
        Err(e) => return usage(&e.to_string()),
    };
    match pool.install(|| cli.command.execute()) {
        Ok(report) => {
            let code = if report.failure.is_some() { 2 } else { 0 };
            let stderr = report
                .failure
                .as_ref()
                .map(|f| format!("certification failed: {f}\n"))
                .unwrap_or_default();
            Outcome {
                code,
                stdout: output::render(&config, &report),
                stderr,
            }
        }
        Err(CliError::Usage(msg)) => usage(&format!("{msg}\n\n{}", cli.command.schema())),
        Err(CliError::Compute(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn usage(msg: &str) -> Outcome {
    Outcome {
        code: 1,
        stdout: String::new(),
        stderr: format!("usage error: {msg}\n"),
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}
