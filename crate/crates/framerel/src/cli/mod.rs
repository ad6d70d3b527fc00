//! Command-line front end.
//!
//! Reports are JSON by default, tables CSV by default; `--format` switches
//! either way. Numeric output is fixed at 12 significant digits so repeated
//! runs of the same command are byte-identical. Exit codes: 0 success,
//! 2 validation failure, 3 domain error.

mod config;
mod format;
mod report;

pub use config::{
    ClassicalConfig, FieldConfig, OscillatorConfig, ParamsConfig, QubitConfig, SampleConfig,
    ScenarioConfig,
};
pub use format::{format_significant, value_to_flat_csv, value_to_json, Table};
pub use report::{emit_density, emit_figure1, infer_report, run_scenario, ScenarioReport};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::PathBuf;
use thiserror::Error;

use crate::numerics::{Grid, OscillatorParams};
use crate::sampling;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "framerel",
    version,
    about = "Frame-relative quantum measurement scenarios: oscillator ladders, Bloch frames, multimode vacuum bookkeeping"
)]
pub struct Cli {
    /// Output format (default: JSON for reports, CSV for tables)
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the first four eigenstate densities over a position grid
    Figure1(Figure1Args),
    /// Qubit measurements on the Bloch sphere
    Qubit {
        #[command(subcommand)]
        command: QubitCommand,
    },
    /// Classical detector-on-an-oscillator demonstration
    Classical {
        #[command(subcommand)]
        command: ClassicalCommand,
    },
    /// Single-mode eigenstates measured through shifted observables
    Oscillator {
        #[command(subcommand)]
        command: OscillatorCommand,
    },
    /// Multimode field scenarios
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Draw positions from an eigenstate density
    Sample(SampleArgs),
    /// Infer the level of a recorded sample batch
    Infer(InferArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Figure1Args {
    #[arg(long, default_value_t = -5.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 5.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 401)]
    pub points: usize,
    /// Write the table to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum QubitCommand {
    /// Measure a qubit state along a frame direction
    Measure(QubitMeasureArgs),
}

#[derive(Debug, Args)]
pub struct QubitMeasureArgs {
    #[arg(long)]
    pub theta: f64,
    #[arg(long)]
    pub phi: f64,
    #[arg(long)]
    pub frame_theta: f64,
    #[arg(long)]
    pub frame_phi: f64,
}

#[derive(Debug, Subcommand)]
pub enum ClassicalCommand {
    /// Observe one oscillator from a detector riding another
    Demo(ClassicalDemoArgs),
}

#[derive(Debug, Args)]
pub struct ClassicalDemoArgs {
    #[arg(long)]
    pub eta1: f64,
    #[arg(long)]
    pub eta2: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
}

#[derive(Debug, Subcommand)]
pub enum OscillatorCommand {
    /// Measure level n through the shifted observable at offset ell
    Measure(OscillatorMeasureArgs),
    /// Tabulate the level-n position density
    Density(OscillatorDensityArgs),
}

#[derive(Debug, Args)]
pub struct OscillatorMeasureArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub ell: u32,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct OscillatorDensityArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = -5.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 5.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 401)]
    pub points: usize,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Debug, Subcommand)]
pub enum FieldCommand {
    /// Run a multimode scenario from a JSON config file
    Scenario(FieldScenarioArgs),
}

#[derive(Debug, Args)]
pub struct FieldScenarioArgs {
    /// Path to a JSON scenario config with "kind": "field"
    #[arg(long)]
    pub config: PathBuf,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub count: u32,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Debug, Args)]
pub struct InferArgs {
    /// Batch CSV produced by the sample subcommand
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub max_level: u32,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

fn params_from_flags(mass: f64, omega: f64, hbar: f64) -> Result<OscillatorParams, CliError> {
    OscillatorParams::new(mass, omega, hbar).map_err(|e| CliError::Validation(e.to_string()))
}

fn grid_from_flags(xmin: f64, xmax: f64, points: usize) -> Result<Grid, CliError> {
    Grid::new(xmin, xmax, points).map_err(|e| CliError::Validation(e.to_string()))
}

fn table_output(table: &Table, format: Option<OutputFormat>) -> String {
    match format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => value_to_json(&table.to_json_value()),
    }
}

fn report_output(report: &ScenarioReport, format: Option<OutputFormat>) -> String {
    match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_flat_csv(),
    }
}

/// Execute a parsed command line, returning the text destined for stdout.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Figure1(args) => {
            let grid = grid_from_flags(args.xmin, args.xmax, args.points)?;
            let table = emit_figure1(&grid, &OscillatorParams::natural())?;
            let text = table_output(&table, format);
            match args.out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| {
                        CliError::Domain(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Qubit { command: QubitCommand::Measure(args) } => {
            let config = ScenarioConfig::Qubit(QubitConfig {
                theta: args.theta,
                phi: args.phi,
                frame_theta: args.frame_theta,
                frame_phi: args.frame_phi,
            });
            let report = run_scenario(&config)?;
            Ok(report_output(&report, format))
        }
        Command::Classical { command: ClassicalCommand::Demo(args) } => {
            let config = ScenarioConfig::Classical(ClassicalConfig {
                eta1: args.eta1,
                eta2: args.eta2,
                mass: args.mass,
                omega: args.omega,
                phase: 0.0,
            });
            let report = run_scenario(&config)?;
            Ok(report_output(&report, format))
        }
        Command::Oscillator { command } => match command {
            OscillatorCommand::Measure(args) => {
                let config = ScenarioConfig::Oscillator(OscillatorConfig {
                    n: args.n,
                    ell: args.ell,
                    params: ParamsConfig { mass: args.mass, omega: args.omega, hbar: args.hbar },
                });
                let report = run_scenario(&config)?;
                Ok(report_output(&report, format))
            }
            OscillatorCommand::Density(args) => {
                let params = params_from_flags(args.mass, args.omega, args.hbar)?;
                let grid = grid_from_flags(args.xmin, args.xmax, args.points)?;
                let table = emit_density(args.n, &grid, &params)?;
                Ok(table_output(&table, format))
            }
        },
        Command::Field { command: FieldCommand::Scenario(args) } => {
            let text = fs::read_to_string(&args.config).map_err(|e| {
                CliError::Validation(format!("cannot read {}: {e}", args.config.display()))
            })?;
            let config = ScenarioConfig::from_json(&text).map_err(CliError::Validation)?;
            if config.kind() != "field" {
                return Err(CliError::Validation(format!(
                    "field scenario expects kind \"field\", got \"{}\"",
                    config.kind()
                )));
            }
            let report = run_scenario(&config)?;
            Ok(report_output(&report, format))
        }
        Command::Sample(args) => {
            let params = params_from_flags(args.mass, args.omega, args.hbar)?;
            if args.count == 0 {
                return Err(CliError::Validation("count must be at least 1".to_string()));
            }
            match format.unwrap_or(OutputFormat::Csv) {
                OutputFormat::Csv => {
                    let batch = report::run_sample(args.n, args.count, args.seed, &params)?;
                    Ok(sampling::batch_to_csv(&batch, format_significant))
                }
                OutputFormat::Json => {
                    let config = ScenarioConfig::Sample(SampleConfig {
                        n: args.n,
                        count: args.count,
                        seed: args.seed,
                        params: ParamsConfig {
                            mass: args.mass,
                            omega: args.omega,
                            hbar: args.hbar,
                        },
                    });
                    let report = run_scenario(&config)?;
                    Ok(report.to_json())
                }
            }
        }
        Command::Infer(args) => {
            let params = params_from_flags(args.mass, args.omega, args.hbar)?;
            let text = fs::read_to_string(&args.input).map_err(|e| {
                CliError::Validation(format!("cannot read {}: {e}", args.input.display()))
            })?;
            let batch = sampling::batch_from_csv(&text)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let report = infer_report(&batch, args.max_level, &params)?;
            Ok(report_output(&report, format))
        }
    }
}

/// Entry point for the thin binary: parse, run, print, map errors to exit
/// codes.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
