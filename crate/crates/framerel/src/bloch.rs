//! Qubit states and measurement observables as unit vectors on the Bloch
//! sphere.
//!
//! A state and the observable measuring it are the same kind of object here:
//! a direction on the sphere. The eigenvalue a measurement returns is +1 or
//! -1 *relative to the frame direction*, and [`interpret`] folds the frame
//! back in to recover the direction the spin actually points.

use serde::{Deserialize, Serialize};
use std::ops::Neg;
use thiserror::Error;

/// How far a squared norm may stray from 1 before the vector is rejected.
pub const UNIT_NORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BlochError {
    #[error("vector ({nx}, {ny}, {nz}) is not unit length within {tolerance}")]
    NotUnit { nx: f64, ny: f64, nz: f64, tolerance: f64 },
    #[error("angles must be finite, got theta={theta}, phi={phi}")]
    NonFiniteAngles { theta: f64, phi: f64 },
}

/// Unit 3-vector standing for either a qubit state or a spin measurement
/// frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub nx: f64,
    pub ny: f64,
    pub nz: f64,
}

impl BlochVector {
    /// Validating constructor. Out-of-tolerance vectors are rejected rather
    /// than renormalized, so a caller bug cannot slip through silently.
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self, BlochError> {
        let norm_sq = nx * nx + ny * ny + nz * nz;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > UNIT_NORM_TOLERANCE {
            return Err(BlochError::NotUnit { nx, ny, nz, tolerance: UNIT_NORM_TOLERANCE });
        }
        Ok(Self { nx, ny, nz })
    }

    pub fn plus_z() -> Self {
        Self { nx: 0.0, ny: 0.0, nz: 1.0 }
    }

    pub fn minus_z() -> Self {
        Self { nx: 0.0, ny: 0.0, nz: -1.0 }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.nx * other.nx + self.ny * other.ny + self.nz * other.nz
    }
}

impl Neg for BlochVector {
    type Output = BlochVector;

    fn neg(self) -> Self {
        Self { nx: -self.nx, ny: -self.ny, nz: -self.nz }
    }
}

/// Eigenvalue outcome of a spin measurement along some frame direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinOutcome {
    Plus,
    Minus,
}

impl SpinOutcome {
    pub fn value(&self) -> f64 {
        match self {
            SpinOutcome::Plus => 1.0,
            SpinOutcome::Minus => -1.0,
        }
    }
}

/// A recorded spin measurement: the frame it was taken in and the +-1
/// eigenvalue it produced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinMeasurement {
    pub frame: BlochVector,
    pub outcome: SpinOutcome,
}

/// Bloch vector (sin t cos p, sin t sin p, cos t) for colatitude theta and
/// azimuth phi. Angles outside the principal ranges wrap by periodicity of
/// the trigonometric map; only non-finite inputs are rejected.
pub fn bloch_from_angles(theta: f64, phi: f64) -> Result<BlochVector, BlochError> {
    if !theta.is_finite() || !phi.is_finite() {
        return Err(BlochError::NonFiniteAngles { theta, phi });
    }
    let (sin_t, cos_t) = theta.sin_cos();
    let (sin_p, cos_p) = phi.sin_cos();
    Ok(BlochVector { nx: sin_t * cos_p, ny: sin_t * sin_p, nz: cos_t })
}

/// Expectation value of the frame observable in the given state,
/// tr(rho nu'.sigma) = state . frame. Always in [-1, 1].
pub fn expectation(state: &BlochVector, frame: &BlochVector) -> f64 {
    state.dot(frame).clamp(-1.0, 1.0)
}

/// Born-rule probabilities (p_plus, p_minus) for the +-1 outcomes. The two
/// sum to 1 exactly.
pub fn outcome_probabilities(state: &BlochVector, frame: &BlochVector) -> (f64, f64) {
    let p_plus = (1.0 + expectation(state, frame)) / 2.0;
    (p_plus, 1.0 - p_plus)
}

/// Fold a measurement record back into an absolute direction: the spin
/// points along outcome * frame. Opposite frames with opposite outcomes
/// describe the same spin.
pub fn interpret(record: &SpinMeasurement) -> BlochVector {
    match record.outcome {
        SpinOutcome::Plus => record.frame,
        SpinOutcome::Minus => -record.frame,
    }
}
