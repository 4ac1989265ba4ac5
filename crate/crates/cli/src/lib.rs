//! `gt-toolkit`: command-line access to the `gt-core` computations.
//!
//! Every subcommand produces a serializable report that can be printed as
//! a plain-text table or as JSON. Exit codes: 0 ok, 1 usage or invalid
//! input, 2 internal discrepancy between independent computations, 3 a
//! failed check.

pub mod catalogue;
pub mod golden;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gt_core::invariants::ActionSpec;
use gt_core::{CyclicAction, GtError};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DISCREPANCY: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Inline `d w0,…,wn` or a JSON file `{"d": …, "weights": […]}`.
#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ActionInput {
    /// Group order d.
    #[arg(allow_negative_numbers = true)]
    pub d: Option<i64>,
    /// Comma-separated weights w0,…,wn.
    #[arg(allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Read the action from a JSON file instead.
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
}

/// Inline `a b d` or a JSON file `{"a": …, "b": …, "d": …}`.
#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct SurfaceInput {
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub d: Option<u32>,
    /// Read the triple from a JSON file instead.
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Invariant monomials of degree t·d for t = 1..T.
    Invariants(ActionInput),
    /// Togliatti bound, WLP test in degree d−1 and GT-system status.
    Classify(ActionInput),
    /// Surface profile with Hilbert function by three routes, polynomial and series.
    Hilbert(SurfaceInput),
    /// Betti table and minimal generator counts of a GT-surface.
    Betti(SurfaceInput),
    /// Binomial minimal generators of the toric ideal through degree 3.
    Ideal(ActionInput),
    /// Normality and bounded Cohen–Macaulay report for a semigroup JSON file.
    Semigroup { file: PathBuf },
    /// The semigroup H_{3t} with its bounded Cohen–Macaulay report.
    H3t { t: u32 },
    /// The semigroup H^k_{3(1+t′k)} with its bounded Cohen–Macaulay report.
    Hk { k: u32, t_prime: u32 },
    /// Runs the built-in golden checks and prints a pass/fail matrix.
    #[command(alias = "verify-paper")]
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "gt-toolkit",
    version,
    about = "Exact invariants of GT-systems, GT-varieties and their semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Horizon T for per-degree tables.
    #[arg(long = "t", global = true, value_name = "T")]
    pub horizon: Option<u32>,
    /// Degree bound D for semigroup searches.
    #[arg(long, global = true, value_name = "D", default_value_t = 6)]
    pub bound: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

/// A parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunSpec {
    pub command: Command,
    pub horizon: Option<u32>,
    pub bound: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl From<Cli> for RunSpec {
    fn from(cli: Cli) -> Self {
        Self {
            command: cli.command,
            horizon: cli.horizon,
            bound: cli.bound,
            format: cli.format,
            output: cli.output,
        }
    }
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            horizon: None,
            bound: 6,
            format: Format::Table,
            output: None,
        }
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn with_horizon(mut self, t: u32) -> Self {
        self.horizon = Some(t);
        self
    }

    pub fn with_bound(mut self, d: u32) -> Self {
        self.bound = d;
        self
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] GtError),
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(GtError::NonIntegral(_) | GtError::Discrepancy(_)) => EXIT_DISCREPANCY,
            _ => EXIT_USAGE,
        }
    }
}

/// Rendered report and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub text: String,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let raw = fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&raw).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

pub fn parse_weights(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|w| {
            w.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("weight {w:?} is not an integer")))
        })
        .collect()
}

impl ActionInput {
    pub fn resolve(&self) -> Result<CyclicAction, CliError> {
        match (&self.spec, self.d, &self.weights) {
            (Some(path), None, None) => {
                let spec: ActionSpec = read_json(path)?;
                Ok(CyclicAction::new(spec.d, &spec.weights)?)
            }
            (None, Some(d), Some(w)) => Ok(CyclicAction::new(d, &parse_weights(w)?)?),
            (Some(_), _, _) => Err(CliError::Usage(
                "give either inline `d w0,…,wn` or --spec FILE, not both".into(),
            )),
            _ => Err(CliError::Usage(
                "expected `d w0,…,wn` or --spec FILE".into(),
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
struct SurfaceFile {
    a: u32,
    b: u32,
    d: u32,
}

impl SurfaceInput {
    pub fn resolve(&self) -> Result<(u32, u32, u32), CliError> {
        match (&self.spec, self.a, self.b, self.d) {
            (Some(path), None, None, None) => {
                let s: SurfaceFile = read_json(path)?;
                Ok((s.a, s.b, s.d))
            }
            (None, Some(a), Some(b), Some(d)) => Ok((a, b, d)),
            (Some(_), ..) => Err(CliError::Usage(
                "give either inline `a b d` or --spec FILE, not both".into(),
            )),
            _ => Err(CliError::Usage("expected `a b d` or --spec FILE".into())),
        }
    }
}

fn build(spec: &RunSpec) -> Result<Box<dyn Report>, CliError> {
    if spec.horizon == Some(0) {
        return Err(CliError::Usage("--t must be at least 1".into()));
    }
    if spec.bound == 0 {
        return Err(CliError::Usage("--bound must be at least 1".into()));
    }
    Ok(match &spec.command {
        Command::Invariants(input) => Box::new(report::invariants(
            &input.resolve()?,
            spec.horizon.unwrap_or(1),
        )),
        Command::Classify(input) => Box::new(report::classify(&input.resolve()?)),
        Command::Hilbert(input) => {
            let (a, b, d) = input.resolve()?;
            Box::new(report::hilbert(
                a,
                b,
                d,
                spec.horizon.unwrap_or(gt_core::hilbert::DEFAULT_HORIZON),
            )?)
        }
        Command::Betti(input) => {
            let (a, b, d) = input.resolve()?;
            Box::new(report::betti(a, b, d)?)
        }
        Command::Ideal(input) => Box::new(report::ideal(&input.resolve()?)?),
        Command::Semigroup { file } => {
            let h = read_json(file)?;
            Box::new(report::semigroup(h, spec.bound)?)
        }
        Command::H3t { t } => {
            let h = gt_core::semigroup::make_h3t(*t)?;
            Box::new(report::family(format!("H_{}", 3 * t), h, spec.bound)?)
        }
        Command::Hk { k, t_prime } => {
            let h = gt_core::semigroup::make_hk(*k, *t_prime)?;
            Box::new(report::family(
                format!("H^{k}_{}", 3 * (1 + t_prime * k)),
                h,
                spec.bound,
            )?)
        }
        Command::Verify => Box::new(golden::run_checks()),
    })
}

/// Runs one command and renders its report.
pub fn run(spec: &RunSpec) -> Result<Outcome, CliError> {
    let report = build(spec)?;
    let text = match spec.format {
        Format::Table => report.table(),
        Format::Json => {
            let value = report.json();
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    Ok(Outcome {
        code: report.exit_code(),
        text,
    })
}
