//! Monte Carlo realization of measurement in position space: draw positions
//! from eigenstate densities and identify the level back from the empirical
//! distribution.
//!
//! Sampling is rejection from a Gaussian envelope whose variance matches the
//! state's mean-square position, with the domination constant found by grid
//! search and widened by a 5% safety margin. The generator is ChaCha12
//! seeded explicitly per batch, so a batch is reproduced bit-for-bit from
//! (level, count, seed, params) on any platform.

use crate::numerics::{self, NumericsError, OscillatorParams, DEFAULT_LEVEL_CAP};
use crate::oscillator::EnergyEigenstate;
use rand_chacha::ChaCha12Rng;
use rand_core::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SamplingError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("sample count must be at least 1")]
    ZeroCount,
    #[error("batch contains no positions")]
    EmptyBatch,
    #[error("envelope domination violated at x = {x}: target {target} exceeds bound {bound} (implementation bug)")]
    EnvelopeViolation { x: f64, target: f64, bound: f64 },
    #[error("all candidate densities underflow to zero at sample index {sample_index} (x = {x})")]
    AllDensitiesUnderflow { sample_index: usize, x: f64 },
    #[error("malformed batch CSV at line {line}: {reason}")]
    MalformedCsv { line: usize, reason: String },
}

/// A batch of position draws plus the provenance needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    /// Level the batch claims to be drawn from, when known.
    pub level_claimed: Option<u32>,
    pub positions: Vec<f64>,
    pub seed: u64,
}

impl SampleBatch {
    pub fn new(
        level_claimed: Option<u32>,
        positions: Vec<f64>,
        seed: u64,
    ) -> Result<Self, SamplingError> {
        if positions.is_empty() {
            return Err(SamplingError::EmptyBatch);
        }
        Ok(Self { level_claimed, positions, seed })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Uniform draw in [0, 1) from the top 53 bits of the stream.
fn uniform(rng: &mut ChaCha12Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal by Box-Muller; one variate per pair of uniforms.
fn standard_normal(rng: &mut ChaCha12Rng) -> f64 {
    let a = 1.0 - uniform(rng); // (0, 1]
    let b = uniform(rng);
    (-2.0 * a.ln()).sqrt() * (TAU * b).cos()
}

/// Dimensionless eigenstate density phi_n(u)^2.
fn dimensionless_density(n: u32, u: f64) -> f64 {
    let h = numerics::hermite_poly(n, u);
    let g = (-0.5 * u * u).exp();
    let phi = h * g;
    phi * phi
}

fn gaussian_pdf(u: f64, variance: f64) -> f64 {
    (-0.5 * u * u / variance).exp() / (2.0 * PI * variance).sqrt()
}

/// Domination constant for the level-n density under the matched-variance
/// Gaussian envelope: grid-searched supremum of the ratio, widened by 5%.
/// The ratio decays beyond the classical turning point for every n, so the
/// searched window [0, sqrt(2n+1) + 6] brackets the supremum.
fn envelope_constant(n: u32) -> f64 {
    let variance = (2.0 * n as f64 + 1.0) / 2.0;
    let u_max = (2.0 * n as f64 + 1.0).sqrt() + 6.0;
    let steps = 8000;
    let mut sup = 0.0_f64;
    for i in 0..=steps {
        let u = u_max * i as f64 / steps as f64;
        let ratio = dimensionless_density(n, u) / gaussian_pdf(u, variance);
        if ratio > sup {
            sup = ratio;
        }
    }
    sup * 1.05
}

/// Draw `count` i.i.d. positions from the level-n density.
///
/// Identical (state, count, seed, params) give a bit-identical batch.
pub fn sample_positions(
    state: EnergyEigenstate,
    count: u32,
    seed: u64,
    params: &OscillatorParams,
) -> Result<SampleBatch, SamplingError> {
    if count == 0 {
        return Err(SamplingError::ZeroCount);
    }
    let n = state.level;
    if n > DEFAULT_LEVEL_CAP {
        return Err(NumericsError::LevelAboveCap { level: n, cap: DEFAULT_LEVEL_CAP }.into());
    }
    // validate params through the same path every other module uses
    numerics::hermite_psi(0, 0.0, params)?;

    let variance = (2.0 * n as f64 + 1.0) / 2.0;
    let sigma = variance.sqrt();
    let constant = envelope_constant(n);
    let length = (params.hbar / (params.mass * params.omega)).sqrt();

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut positions = Vec::with_capacity(count as usize);
    while positions.len() < count as usize {
        let u = sigma * standard_normal(&mut rng);
        let target = dimensionless_density(n, u);
        let bound = constant * gaussian_pdf(u, variance);
        if target > bound {
            return Err(SamplingError::EnvelopeViolation { x: u * length, target, bound });
        }
        if uniform(&mut rng) * bound < target {
            positions.push(u * length);
        }
    }
    SampleBatch::new(Some(n), positions, seed)
}

/// Maximum-likelihood level identification over candidates 0..=max_level.
///
/// Returns the best level and the per-candidate log-likelihoods
/// sum_i log psi_n(x_i)^2. Ties break toward the smaller level, the
/// conservative lower-energy claim.
pub fn infer_level(
    batch: &SampleBatch,
    max_level: u32,
    params: &OscillatorParams,
) -> Result<(u32, Vec<f64>), SamplingError> {
    if batch.positions.is_empty() {
        return Err(SamplingError::EmptyBatch);
    }
    let candidates = max_level as usize + 1;
    let mut log_likelihoods = vec![0.0_f64; candidates];
    for (i, &x) in batch.positions.iter().enumerate() {
        let psis = numerics::hermite_psi_all(max_level, x, params)?;
        let mut any_support = false;
        for (n, &psi) in psis.iter().enumerate() {
            if psi == 0.0 {
                log_likelihoods[n] = f64::NEG_INFINITY;
            } else {
                any_support = true;
                log_likelihoods[n] += 2.0 * psi.abs().ln();
            }
        }
        if !any_support {
            return Err(SamplingError::AllDensitiesUnderflow { sample_index: i, x });
        }
    }
    let mut best = 0u32;
    for (n, &ll) in log_likelihoods.iter().enumerate().skip(1) {
        if ll > log_likelihoods[best as usize] {
            best = n as u32;
        }
    }
    Ok((best, log_likelihoods))
}

/// Mean of the squared positions.
pub fn empirical_x2(batch: &SampleBatch) -> Result<f64, SamplingError> {
    if batch.positions.is_empty() {
        return Err(SamplingError::EmptyBatch);
    }
    Ok(batch.positions.iter().map(|x| x * x).sum::<f64>() / batch.positions.len() as f64)
}

/// Serialize a batch as CSV: comment header carrying provenance, then one
/// position per line under a `position` column.
pub fn batch_to_csv(batch: &SampleBatch, format_value: impl Fn(f64) -> String) -> String {
    let mut out = String::new();
    match batch.level_claimed {
        Some(n) => out.push_str(&format!("# level_claimed={n}\n")),
        None => out.push_str("# level_claimed=unknown\n"),
    }
    out.push_str(&format!("# seed={}\n", batch.seed));
    out.push_str("position\n");
    for &x in &batch.positions {
        out.push_str(&format_value(x));
        out.push('\n');
    }
    out
}

/// Parse the CSV format written by [`batch_to_csv`].
pub fn batch_from_csv(text: &str) -> Result<SampleBatch, SamplingError> {
    let mut level_claimed = None;
    let mut seed = 0u64;
    let mut positions = Vec::new();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("level_claimed=") {
                if v != "unknown" {
                    level_claimed =
                        Some(v.parse::<u32>().map_err(|e| SamplingError::MalformedCsv {
                            line: lineno,
                            reason: format!("bad level_claimed: {e}"),
                        })?);
                }
            } else if let Some(v) = rest.strip_prefix("seed=") {
                seed = v.parse::<u64>().map_err(|e| SamplingError::MalformedCsv {
                    line: lineno,
                    reason: format!("bad seed: {e}"),
                })?;
            }
            continue;
        }
        if !saw_header {
            if line != "position" {
                return Err(SamplingError::MalformedCsv {
                    line: lineno,
                    reason: format!("expected 'position' header, got '{line}'"),
                });
            }
            saw_header = true;
            continue;
        }
        let x = line.parse::<f64>().map_err(|e| SamplingError::MalformedCsv {
            line: lineno,
            reason: format!("bad position value: {e}"),
        })?;
        positions.push(x);
    }
    SampleBatch::new(level_claimed, positions, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn natural() -> OscillatorParams {
        OscillatorParams::natural()
    }

    #[test]
    fn identical_seeds_reproduce_bit_for_bit() {
        let a = sample_positions(EnergyEigenstate::new(2), 500, 7, &natural()).unwrap();
        let b = sample_positions(EnergyEigenstate::new(2), 500, 7, &natural()).unwrap();
        assert_eq!(a, b);
        let c = sample_positions(EnergyEigenstate::new(2), 500, 8, &natural()).unwrap();
        assert_ne!(a.positions, c.positions);
    }

    #[test]
    fn ground_state_moments() {
        let batch = sample_positions(EnergyEigenstate::new(0), 100_000, 1, &natural()).unwrap();
        let nf = batch.len() as f64;
        let mean = batch.positions.iter().sum::<f64>() / nf;
        let x2 = empirical_x2(&batch).unwrap();
        // <x^2> = 1/2, var(x^2) = <x^4> - <x^2>^2 = 3/4 - 1/4 = 1/2
        let se_mean = (0.5f64 / nf).sqrt();
        let se_x2 = (0.5f64 / nf).sqrt();
        assert!(mean.abs() < 5.0 * se_mean, "mean {mean} vs se {se_mean}");
        assert!((x2 - 0.5).abs() < 5.0 * se_x2, "x2 {x2} vs se {se_x2}");
    }

    #[test]
    fn third_level_second_moment() {
        let batch = sample_positions(EnergyEigenstate::new(3), 100_000, 11, &natural()).unwrap();
        let x2 = empirical_x2(&batch).unwrap();
        // <x^2> = 7/2; <x^4> = 3/4 (2n^2+2n+1) = 3/4 * 25 at n = 3
        let variance = 0.75 * 25.0 - 3.5 * 3.5;
        let se = (variance / batch.len() as f64).sqrt();
        assert!((x2 - 3.5).abs() < 5.0 * se, "x2 {x2} vs se {se}");
    }

    #[test]
    fn scaling_follows_the_oscillator_length() {
        // quadruple the mass: <x^2> shrinks by 4
        let heavy = OscillatorParams::new(4.0, 1.0, 1.0).unwrap();
        let batch = sample_positions(EnergyEigenstate::new(0), 50_000, 3, &heavy).unwrap();
        let x2 = empirical_x2(&batch).unwrap();
        let se = (0.5 / 16.0 / batch.len() as f64).sqrt();
        assert!((x2 - 0.125).abs() < 5.0 * se, "x2 {x2}");
    }

    #[test]
    fn inference_identifies_the_ground_state() {
        let batch = sample_positions(EnergyEigenstate::new(0), 10_000, 5, &natural()).unwrap();
        let (best, lls) = infer_level(&batch, 5, &natural()).unwrap();
        assert_eq!(best, 0);
        assert_eq!(lls.len(), 6);
        assert!(lls[0] > lls[1]);
    }

    #[test]
    fn inference_with_a_single_candidate() {
        let batch = sample_positions(EnergyEigenstate::new(0), 100, 5, &natural()).unwrap();
        let (best, lls) = infer_level(&batch, 0, &natural()).unwrap();
        assert_eq!(best, 0);
        assert_eq!(lls.len(), 1);
    }

    #[test]
    fn underflowing_sample_is_reported_with_its_index() {
        let batch = SampleBatch::new(None, vec![0.5, 60.0, 1.0], 0).unwrap();
        let err = infer_level(&batch, 3, &natural()).unwrap_err();
        assert!(matches!(
            err,
            SamplingError::AllDensitiesUnderflow { sample_index: 1, .. }
        ));
    }

    #[test]
    fn empirical_x2_basics() {
        let batch = SampleBatch::new(None, vec![1.0, -1.0], 0).unwrap();
        assert_eq!(empirical_x2(&batch).unwrap(), 1.0);
        let batch = SampleBatch::new(None, vec![0.0, 0.0, 0.0], 0).unwrap();
        assert_eq!(empirical_x2(&batch).unwrap(), 0.0);
        assert!(SampleBatch::new(None, vec![], 0).is_err());
        let hollow = SampleBatch { level_claimed: None, positions: vec![], seed: 0 };
        assert!(matches!(empirical_x2(&hollow), Err(SamplingError::EmptyBatch)));
    }

    #[test]
    fn csv_round_trip() {
        let batch = sample_positions(EnergyEigenstate::new(1), 64, 99, &natural()).unwrap();
        let text = batch_to_csv(&batch, |v| format!("{v:?}"));
        let back = batch_from_csv(&text).unwrap();
        assert_eq!(batch, back);

        let unknown = SampleBatch::new(None, vec![0.25, -0.5], 3).unwrap();
        let text = batch_to_csv(&unknown, |v| format!("{v:?}"));
        let back = batch_from_csv(&text).unwrap();
        assert_eq!(unknown, back);
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(batch_from_csv("position\nnot-a-number\n").is_err());
        assert!(batch_from_csv("# seed=abc\nposition\n1.0\n").is_err());
        assert!(batch_from_csv("wrongheader\n1.0\n").is_err());
        // no positions at all
        assert!(matches!(
            batch_from_csv("# seed=1\nposition\n"),
            Err(SamplingError::EmptyBatch)
        ));
    }

    #[test]
    fn zero_count_rejected() {
        assert!(matches!(
            sample_positions(EnergyEigenstate::new(0), 0, 1, &natural()),
            Err(SamplingError::ZeroCount)
        ));
    }

    #[test]
    fn level_cap_respected() {
        assert!(sample_positions(EnergyEigenstate::new(61), 10, 1, &natural()).is_err());
    }
}
