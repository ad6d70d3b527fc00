//! Scenario execution and report assembly.
//!
//! A report echoes its config and is fully determined by it (plus the seed
//! carried inside), so golden-file comparisons are meaningful.

use serde_json::{json, Value};

use super::config::ScenarioConfig;
use super::format::Table;
use super::CliError;
use crate::bloch::{self, BlochVector, SpinMeasurement, SpinOutcome};
use crate::classical::{self, ClassicalOscillator};
use crate::field::{self, ModeSet, MultimodeFrame, MultimodeState};
use crate::numerics::{Grid, OscillatorParams};
use crate::oscillator::{self, EnergyEigenstate, FrameOffset, MeasurementRecord};
use crate::sampling::{self, SampleBatch};

/// Machine-readable result of one scenario run.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    value: Value,
}

impl ScenarioReport {
    pub fn as_value(&self) -> &Value {
        &self.value
    }

    pub fn to_json(&self) -> String {
        super::format::value_to_json(&self.value)
    }

    pub fn to_flat_csv(&self) -> String {
        super::format::value_to_flat_csv(&self.value)
    }
}

fn config_echo(config: &ScenarioConfig) -> Value {
    serde_json::to_value(config).expect("config echo")
}

fn bloch_value(v: &BlochVector) -> Value {
    json!({ "nx": v.nx, "ny": v.ny, "nz": v.nz })
}

fn record_value(record: &MeasurementRecord) -> Value {
    json!({
        "frame_ell": record.frame.ell,
        "eigenvalue_outcome": record.eigenvalue_outcome,
        "lambda_outcome": record.lambda_outcome,
        "in_support": record.in_support,
    })
}

/// Run a validated scenario and assemble its report. Deterministic given
/// the config (any randomness is driven by the seed inside it).
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioReport, CliError> {
    config.validate().map_err(CliError::Validation)?;
    let echo = config_echo(config);
    let value = match config {
        ScenarioConfig::Qubit(c) => {
            let state = bloch::bloch_from_angles(c.theta, c.phi)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let frame = bloch::bloch_from_angles(c.frame_theta, c.frame_phi)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let (p_plus, p_minus) = bloch::outcome_probabilities(&state, &frame);
            let outcomes: Vec<Value> = [(SpinOutcome::Plus, p_plus), (SpinOutcome::Minus, p_minus)]
                .iter()
                .map(|(outcome, p)| {
                    let inferred =
                        bloch::interpret(&SpinMeasurement { frame, outcome: *outcome });
                    json!({
                        "outcome": outcome.value(),
                        "probability": p,
                        "inferred_direction": bloch_value(&inferred),
                    })
                })
                .collect();
            json!({
                "kind": "qubit",
                "config": echo,
                "state": bloch_value(&state),
                "frame": bloch_value(&frame),
                "expectation": bloch::expectation(&state, &frame),
                "outcomes": outcomes,
            })
        }
        ScenarioConfig::Classical(c) => {
            let particle = ClassicalOscillator::new(c.eta1, c.omega, c.phase, c.mass)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let detector = ClassicalOscillator::new(c.eta2, c.omega, c.phase, c.mass)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let rest = ClassicalOscillator::new(0.0, c.omega, c.phase, c.mass)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let observed = classical::observed_energy(&particle, &detector)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let full = classical::observed_energy(&particle, &rest)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            json!({
                "kind": "classical",
                "config": echo,
                "relative_amplitude": c.eta1 - c.eta2,
                "observed_energy": observed,
                "particle_energy": full,
            })
        }
        ScenarioConfig::Oscillator(c) => {
            let params = params_from(&c.params)?;
            let state = EnergyEigenstate::new(c.n);
            let frame = FrameOffset::new(c.ell);
            let record = oscillator::measure(state, frame, &params);
            json!({
                "kind": "oscillator",
                "config": echo,
                "record": record_value(&record),
                "state_lambda": oscillator::lambda_of(c.n, &params).value(),
                "frame_lambda": oscillator::lambda_of(c.ell, &params).value(),
                "state_energy": oscillator::eigenenergy(state, &params),
            })
        }
        ScenarioConfig::Field(c) => {
            let params = params_from(&c.params)?;
            let mode_count = c.occupations.len();
            let modes = ModeSet::uniform(mode_count, params)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let state = MultimodeState::new(c.occupations.clone());
            let frame = MultimodeFrame::new(c.offsets.clone());
            let records = field::mode_outcomes(&state, &frame, &modes)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let out_of_support: Vec<usize> = records
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.in_support)
                .map(|(k, _)| k)
                .collect();
            let total_relative = if out_of_support.is_empty() {
                Some(
                    field::total_relative_energy(&state, &frame, &modes)
                        .map_err(|e| CliError::Domain(e.to_string()))?,
                )
            } else {
                None
            };
            let record_values: Vec<Value> = records.iter().map(record_value).collect();
            json!({
                "kind": "field",
                "config": echo,
                "mode_records": record_values,
                "out_of_support_modes": out_of_support,
                "total_relative_energy": total_relative,
                "total_state_energy": field::total_state_energy(&state, &modes)
                    .map_err(|e| CliError::Domain(e.to_string()))?,
                "vacuum_energy_partial_sum":
                    field::vacuum_energy_partial_sum(mode_count, &params),
            })
        }
        ScenarioConfig::Sample(c) => {
            let params = params_from(&c.params)?;
            let batch = run_sample(c.n, c.count, c.seed, &params)?;
            let x2 = sampling::empirical_x2(&batch)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            json!({
                "kind": "sample",
                "config": echo,
                "level_claimed": batch.level_claimed,
                "seed": batch.seed,
                "count": batch.positions.len(),
                "empirical_x2": x2,
                "positions": batch.positions,
            })
        }
    };
    Ok(ScenarioReport { value })
}

fn params_from(config: &super::config::ParamsConfig) -> Result<OscillatorParams, CliError> {
    config.to_params().map_err(CliError::Validation)
}

pub fn run_sample(
    n: u32,
    count: u32,
    seed: u64,
    params: &OscillatorParams,
) -> Result<SampleBatch, CliError> {
    sampling::sample_positions(EnergyEigenstate::new(n), count, seed, params)
        .map_err(|e| CliError::Domain(e.to_string()))
}

/// Report for level inference over a previously recorded batch.
pub fn infer_report(
    batch: &SampleBatch,
    max_level: u32,
    params: &OscillatorParams,
) -> Result<ScenarioReport, CliError> {
    let (best, log_likelihoods) = sampling::infer_level(batch, max_level, params)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let x2 = sampling::empirical_x2(batch).map_err(|e| CliError::Domain(e.to_string()))?;
    let value = json!({
        "kind": "infer",
        "level_claimed": batch.level_claimed,
        "seed": batch.seed,
        "count": batch.positions.len(),
        "max_level": max_level,
        "best_level": best,
        "log_likelihoods": log_likelihoods,
        "empirical_x2": x2,
    });
    Ok(ScenarioReport { value })
}

/// Densities of the first four levels tabulated over the grid: columns
/// x, p0, p1, p2, p3 in natural units.
pub fn emit_figure1(grid: &Grid, params: &OscillatorParams) -> Result<Table, CliError> {
    let mut rows = Vec::with_capacity(grid.points());
    for x in grid.values() {
        let mut row = Vec::with_capacity(5);
        row.push(x);
        for n in 0..4u32 {
            let d = oscillator::position_density(EnergyEigenstate::new(n), x, params)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            row.push(d);
        }
        rows.push(row);
    }
    Ok(Table {
        columns: vec!["x".into(), "p0".into(), "p1".into(), "p2".into(), "p3".into()],
        rows,
    })
}

/// Single-level density table with columns x, density.
pub fn emit_density(
    n: u32,
    grid: &Grid,
    params: &OscillatorParams,
) -> Result<Table, CliError> {
    let table = oscillator::density_grid(EnergyEigenstate::new(n), grid, params)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(Table {
        columns: vec!["x".into(), "density".into()],
        rows: table.into_iter().map(|(x, d)| vec![x, d]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::{ClassicalConfig, FieldConfig, ParamsConfig, QubitConfig};
    use approx::assert_abs_diff_eq;

    #[test]
    fn qubit_down_frame_is_deterministically_minus_one() {
        let config = ScenarioConfig::Qubit(QubitConfig {
            theta: 0.0,
            phi: 0.0,
            frame_theta: std::f64::consts::PI,
            frame_phi: 0.0,
        });
        let report = run_scenario(&config).unwrap();
        let v = report.as_value();
        assert_eq!(v["expectation"], serde_json::json!(-1.0));
        assert_eq!(v["outcomes"][0]["probability"], serde_json::json!(0.0));
        assert_eq!(v["outcomes"][1]["probability"], serde_json::json!(1.0));
    }

    #[test]
    fn classical_equal_amplitudes_observe_zero() {
        let config = ScenarioConfig::Classical(ClassicalConfig {
            eta1: 1.0,
            eta2: 1.0,
            mass: 1.0,
            omega: 1.0,
            phase: 0.0,
        });
        let report = run_scenario(&config).unwrap();
        let v = report.as_value();
        assert_eq!(v["observed_energy"], serde_json::json!(0.0));
        assert_eq!(v["particle_energy"], serde_json::json!(0.5));
    }

    #[test]
    fn field_vacuum_scenario_reports_the_partial_sum() {
        let config = ScenarioConfig::Field(FieldConfig {
            occupations: vec![0, 0, 0],
            offsets: vec![0, 0, 0],
            params: ParamsConfig::default(),
        });
        let report = run_scenario(&config).unwrap();
        let v = report.as_value();
        assert_eq!(v["vacuum_energy_partial_sum"], serde_json::json!(1.5));
        assert_eq!(v["total_relative_energy"], serde_json::json!(0.0));
        for k in 0..3 {
            assert_eq!(v["mode_records"][k]["lambda_outcome"], serde_json::json!(0.0));
        }
    }

    #[test]
    fn field_out_of_support_mode_yields_null_total() {
        let config = ScenarioConfig::Field(FieldConfig {
            occupations: vec![0, 0],
            offsets: vec![1, 0],
            params: ParamsConfig::default(),
        });
        let report = run_scenario(&config).unwrap();
        let v = report.as_value();
        assert_eq!(v["total_relative_energy"], serde_json::Value::Null);
        assert_eq!(v["out_of_support_modes"], serde_json::json!([0]));
    }

    #[test]
    fn figure1_table_columns_and_peak() {
        let grid = Grid::new(-5.0, 5.0, 401).unwrap();
        let table = emit_figure1(&grid, &OscillatorParams::natural()).unwrap();
        assert_eq!(table.columns, vec!["x", "p0", "p1", "p2", "p3"]);
        assert_eq!(table.rows.len(), 401);
        // p0 peaks at the origin with 1/sqrt(pi)
        let center = &table.rows[200];
        assert_eq!(center[0], 0.0);
        assert_abs_diff_eq!(center[1], 0.5641895835477563, epsilon = 1e-12);
        for row in &table.rows {
            assert!(row[1] <= center[1] + 1e-15);
        }
    }

    #[test]
    fn figure1_columns_are_normalized_and_symmetric() {
        let grid = Grid::new(-5.0, 5.0, 401).unwrap();
        let params = OscillatorParams::natural();
        let table = emit_figure1(&grid, &params).unwrap();
        for col in 1..=4 {
            let values: Vec<f64> = table.rows.iter().map(|r| r[col]).collect();
            let integral = crate::numerics::integrate_on_grid(&values, &grid).unwrap();
            assert_abs_diff_eq!(integral, 1.0, epsilon = 1e-4);
            for i in 0..values.len() {
                let j = values.len() - 1 - i;
                assert_abs_diff_eq!(values[i], values[j], epsilon = 1e-12);
            }
        }
    }
}
