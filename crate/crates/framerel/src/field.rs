//! Multimode quantized field as decoupled oscillators, with per-mode frame
//! offsets realized by photon-number detectors.
//!
//! The vacuum partial sum M hbar omega / 2 grows without bound in the mode
//! count while every frame-relative outcome of the matched detector array
//! stays at zero — the two numbers this module exists to put side by side.

use crate::numerics::OscillatorParams;
use crate::oscillator::{self, EnergyEigenstate, FrameOffset, MeasurementRecord};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("length mismatch: {left} modes vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("mode set must contain at least one mode")]
    EmptyModeSet,
    #[error("mode {mode} out of support: occupation {occupation} below frame offset {offset}")]
    ModeOutOfSupport { mode: usize, occupation: u32, offset: u32 },
}

/// A finite collection of field modes and their physical parameters.
///
/// The infinite collection is represented by the monotone growth of the
/// vacuum partial sum, not by a lazy structure; every concrete scenario
/// touches finitely many modes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSet {
    params_per_mode: Vec<OscillatorParams>,
}

impl ModeSet {
    pub fn new(params_per_mode: Vec<OscillatorParams>) -> Result<Self, FieldError> {
        if params_per_mode.is_empty() {
            return Err(FieldError::EmptyModeSet);
        }
        Ok(Self { params_per_mode })
    }

    /// The common case: one set of parameters replicated across all modes.
    pub fn uniform(mode_count: usize, params: OscillatorParams) -> Result<Self, FieldError> {
        Self::new(vec![params; mode_count])
    }

    pub fn mode_count(&self) -> usize {
        self.params_per_mode.len()
    }

    pub fn params(&self, mode: usize) -> &OscillatorParams {
        &self.params_per_mode[mode]
    }
}

/// Occupation numbers n_k across the modes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultimodeState {
    pub occupations: Vec<u32>,
}

impl MultimodeState {
    pub fn new(occupations: Vec<u32>) -> Self {
        Self { occupations }
    }

    pub fn vacuum(mode_count: usize) -> Self {
        Self { occupations: vec![0; mode_count] }
    }
}

/// Frame offsets ell_k across the modes — one detector rung per mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultimodeFrame {
    pub offsets: Vec<u32>,
}

impl MultimodeFrame {
    pub fn new(offsets: Vec<u32>) -> Self {
        Self { offsets }
    }

    pub fn ground(mode_count: usize) -> Self {
        Self { offsets: vec![0; mode_count] }
    }
}

/// Raw photon counts registered by the detector array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectionRecord {
    pub counts: Vec<u32>,
}

impl DetectionRecord {
    pub fn new(counts: Vec<u32>) -> Self {
        Self { counts }
    }
}

fn check_len(left: usize, right: usize) -> Result<(), FieldError> {
    if left != right {
        return Err(FieldError::LengthMismatch { left, right });
    }
    Ok(())
}

/// Partial sum of the vacuum energy over the first `mode_count` modes,
/// M hbar omega / 2. Strictly increasing in M and unbounded.
pub fn vacuum_energy_partial_sum(mode_count: usize, params: &OscillatorParams) -> f64 {
    mode_count as f64 * 0.5 * params.hbar * params.omega
}

/// Per-mode measurement records; modes are fully independent.
pub fn mode_outcomes(
    state: &MultimodeState,
    frame: &MultimodeFrame,
    modes: &ModeSet,
) -> Result<Vec<MeasurementRecord>, FieldError> {
    check_len(state.occupations.len(), modes.mode_count())?;
    check_len(frame.offsets.len(), modes.mode_count())?;
    Ok(state
        .occupations
        .iter()
        .zip(&frame.offsets)
        .enumerate()
        .map(|(k, (&n, &ell))| {
            oscillator::measure(
                EnergyEigenstate::new(n),
                FrameOffset::new(ell),
                modes.params(k),
            )
        })
        .collect())
}

/// Total frame-relative energy sum_k (n_k - ell_k) hbar omega_k, defined
/// only when every mode is in support. A single out-of-support mode poisons
/// the total with its index; a partial sum would fabricate an energy.
pub fn total_relative_energy(
    state: &MultimodeState,
    frame: &MultimodeFrame,
    modes: &ModeSet,
) -> Result<f64, FieldError> {
    check_len(state.occupations.len(), modes.mode_count())?;
    check_len(frame.offsets.len(), modes.mode_count())?;
    let mut total = 0.0;
    for (k, (&n, &ell)) in state.occupations.iter().zip(&frame.offsets).enumerate() {
        if n < ell {
            return Err(FieldError::ModeOutOfSupport { mode: k, occupation: n, offset: ell });
        }
        let p = modes.params(k);
        total += (n - ell) as f64 * p.hbar * p.omega;
    }
    Ok(total)
}

/// Energy state inferred from photon counts under the stated frame:
/// occupation n_k = counts_k + ell_k.
pub fn state_from_counts(
    record: &DetectionRecord,
    frame: &MultimodeFrame,
) -> Result<MultimodeState, FieldError> {
    check_len(record.counts.len(), frame.offsets.len())?;
    Ok(MultimodeState::new(
        record
            .counts
            .iter()
            .zip(&frame.offsets)
            .map(|(&c, &ell)| c + ell)
            .collect(),
    ))
}

/// Absolute (frame-free) energy sum_k (n_k + 1/2) hbar omega_k, including
/// every zero-point term. The quantity that diverges with the mode count.
pub fn total_state_energy(state: &MultimodeState, modes: &ModeSet) -> Result<f64, FieldError> {
    check_len(state.occupations.len(), modes.mode_count())?;
    Ok(state
        .occupations
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let p = modes.params(k);
            (n as f64 + 0.5) * p.hbar * p.omega
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn natural_modes(m: usize) -> ModeSet {
        ModeSet::uniform(m, OscillatorParams::natural()).unwrap()
    }

    #[test]
    fn vacuum_partial_sums() {
        let p = OscillatorParams::natural();
        assert_eq!(vacuum_energy_partial_sum(1, &p), 0.5);
        assert_eq!(vacuum_energy_partial_sum(4, &p), 2.0);
        assert_eq!(vacuum_energy_partial_sum(1_000_000, &p), 5.0e5);
    }

    #[test]
    fn matched_detectors_read_zero_everywhere() {
        let modes = natural_modes(3);
        let records = mode_outcomes(
            &MultimodeState::vacuum(3),
            &MultimodeFrame::ground(3),
            &modes,
        )
        .unwrap();
        assert!(records.iter().all(|r| r.lambda_outcome == 0.0 && r.in_support));

        // raised state seen by a detector raised to the same rung
        let records = mode_outcomes(
            &MultimodeState::new(vec![0, 2, 0]),
            &MultimodeFrame::new(vec![0, 2, 0]),
            &modes,
        )
        .unwrap();
        assert!(records.iter().all(|r| r.lambda_outcome == 0.0));
    }

    #[test]
    fn single_excitation_is_seen_only_by_its_own_detector() {
        let modes = natural_modes(3);
        let records = mode_outcomes(
            &MultimodeState::new(vec![1, 0, 0]),
            &MultimodeFrame::ground(3),
            &modes,
        )
        .unwrap();
        let lambdas: Vec<f64> = records.iter().map(|r| r.lambda_outcome).collect();
        assert_eq!(lambdas, vec![2.0, 0.0, 0.0]);
    }

    #[test]
    fn relative_energy_totals() {
        let modes = natural_modes(2);
        assert_eq!(
            total_relative_energy(
                &MultimodeState::new(vec![3, 1]),
                &MultimodeFrame::new(vec![1, 1]),
                &modes
            )
            .unwrap(),
            2.0
        );
        assert_eq!(
            total_relative_energy(
                &MultimodeState::vacuum(2),
                &MultimodeFrame::ground(2),
                &modes
            )
            .unwrap(),
            0.0
        );
    }

    #[test]
    fn out_of_support_mode_is_reported_with_its_index() {
        let modes = natural_modes(3);
        let err = total_relative_energy(
            &MultimodeState::new(vec![1, 0, 2]),
            &MultimodeFrame::new(vec![0, 1, 0]),
            &modes,
        )
        .unwrap_err();
        assert_eq!(
            err,
            FieldError::ModeOutOfSupport { mode: 1, occupation: 0, offset: 1 }
        );
    }

    #[test]
    fn counts_plus_offsets_recover_the_state() {
        let state = state_from_counts(
            &DetectionRecord::new(vec![3, 0]),
            &MultimodeFrame::new(vec![1, 0]),
        )
        .unwrap();
        assert_eq!(state.occupations, vec![4, 0]);

        let state = state_from_counts(
            &DetectionRecord::new(vec![2, 5]),
            &MultimodeFrame::new(vec![2, 0]),
        )
        .unwrap();
        assert_eq!(state.occupations, vec![4, 5]);

        let state = state_from_counts(
            &DetectionRecord::new(vec![0, 0, 0]),
            &MultimodeFrame::ground(3),
        )
        .unwrap();
        assert_eq!(state, MultimodeState::vacuum(3));
    }

    #[test]
    fn absolute_energies() {
        let modes = natural_modes(4);
        assert_eq!(
            total_state_energy(&MultimodeState::vacuum(4), &modes).unwrap(),
            2.0
        );
        let modes = natural_modes(2);
        assert_eq!(
            total_state_energy(&MultimodeState::new(vec![1, 2]), &modes).unwrap(),
            4.0
        );
    }

    #[test]
    fn vacuum_state_energy_equals_the_partial_sum() {
        let p = OscillatorParams::natural();
        for m in [1usize, 10, 100, 1000] {
            let modes = natural_modes(m);
            assert_eq!(
                total_state_energy(&MultimodeState::vacuum(m), &modes).unwrap(),
                vacuum_energy_partial_sum(m, &p)
            );
        }
    }

    #[test]
    fn excitation_vs_divergent_vacuum_sum() {
        // one photon in a million-mode field: the detectors see hbar omega,
        // the naive vacuum sum sits at half a million
        let m = 1_000_000;
        let modes = natural_modes(m);
        let mut occ = vec![0u32; m];
        occ[0] = 1;
        let state = MultimodeState::new(occ);
        let frame = MultimodeFrame::ground(m);
        assert_eq!(total_relative_energy(&state, &frame, &modes).unwrap(), 1.0);
        assert_eq!(
            vacuum_energy_partial_sum(m, &OscillatorParams::natural()),
            5.0e5
        );
    }

    #[test]
    fn relative_energy_is_the_difference_of_absolute_energies() {
        let modes = ModeSet::new(vec![
            OscillatorParams::natural(),
            OscillatorParams::new(1.0, 2.5, 1.0).unwrap(),
            OscillatorParams::new(2.0, 0.7, 1.3).unwrap(),
        ])
        .unwrap();
        let state = MultimodeState::new(vec![4, 2, 3]);
        let frame = MultimodeFrame::new(vec![1, 2, 0]);
        let frame_as_state = MultimodeState::new(frame.offsets.clone());
        let relative = total_relative_energy(&state, &frame, &modes).unwrap();
        let difference = total_state_energy(&state, &modes).unwrap()
            - total_state_energy(&frame_as_state, &modes).unwrap();
        assert_abs_diff_eq!(relative, difference, epsilon = 1e-9);
    }

    #[test]
    fn length_mismatches_are_errors() {
        let modes = natural_modes(2);
        assert!(mode_outcomes(
            &MultimodeState::vacuum(3),
            &MultimodeFrame::ground(2),
            &modes
        )
        .is_err());
        assert!(state_from_counts(
            &DetectionRecord::new(vec![1]),
            &MultimodeFrame::ground(2)
        )
        .is_err());
        assert!(total_state_energy(&MultimodeState::vacuum(5), &modes).is_err());
        assert!(ModeSet::new(vec![]).is_err());
    }
}
