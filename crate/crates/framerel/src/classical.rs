//! A detector riding its own oscillator measures only the relative
//! amplitude.
//!
//! Two oscillators sharing omega and phase differ only in amplitude, and a
//! detector mounted on the second one sees the particle at
//! (eta1 - eta2) cos(omega t + phi). The energy it reports is built from
//! that difference, so a particle with plenty of absolute energy can read
//! exactly zero when the detector swings along with it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance for the shared omega / shared phase precondition.
pub const PHASE_LOCK_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassicalError {
    #[error("amplitude must be non-negative, got {value}")]
    NegativeAmplitude { value: f64 },
    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("oscillators are not phase-locked: omega {omega_particle} vs {omega_detector}, phase {phase_particle} vs {phase_detector}")]
    NotPhaseLocked {
        omega_particle: f64,
        omega_detector: f64,
        phase_particle: f64,
        phase_detector: f64,
    },
    #[error("detector amplitude {detector} exceeds particle amplitude {particle}")]
    AmplitudeOrder { particle: f64, detector: f64 },
}

/// One classical harmonic oscillator x(t) = eta cos(omega t + phase).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalOscillator {
    pub eta: f64,
    pub omega: f64,
    pub phase: f64,
    pub mass: f64,
}

impl ClassicalOscillator {
    pub fn new(eta: f64, omega: f64, phase: f64, mass: f64) -> Result<Self, ClassicalError> {
        if eta < 0.0 || !eta.is_finite() {
            return Err(ClassicalError::NegativeAmplitude { value: eta });
        }
        if omega <= 0.0 || !omega.is_finite() {
            return Err(ClassicalError::NonPositive { name: "omega", value: omega });
        }
        if mass <= 0.0 || !mass.is_finite() {
            return Err(ClassicalError::NonPositive { name: "mass", value: mass });
        }
        Ok(Self { eta, omega, phase, mass })
    }
}

fn check_pair(
    particle: &ClassicalOscillator,
    detector: &ClassicalOscillator,
) -> Result<(), ClassicalError> {
    if (particle.omega - detector.omega).abs() > PHASE_LOCK_TOLERANCE
        || (particle.phase - detector.phase).abs() > PHASE_LOCK_TOLERANCE
    {
        return Err(ClassicalError::NotPhaseLocked {
            omega_particle: particle.omega,
            omega_detector: detector.omega,
            phase_particle: particle.phase,
            phase_detector: detector.phase,
        });
    }
    if detector.eta > particle.eta {
        return Err(ClassicalError::AmplitudeOrder {
            particle: particle.eta,
            detector: detector.eta,
        });
    }
    Ok(())
}

/// Position eta cos(omega t + phase) at time t.
pub fn position_at(osc: &ClassicalOscillator, t: f64) -> f64 {
    osc.eta * (osc.omega * t + osc.phase).cos()
}

/// Particle position as seen from the detector's oscillator:
/// (eta1 - eta2) cos(omega t + phase).
pub fn relative_position_at(
    particle: &ClassicalOscillator,
    detector: &ClassicalOscillator,
    t: f64,
) -> Result<f64, ClassicalError> {
    check_pair(particle, detector)?;
    Ok((particle.eta - detector.eta) * (particle.omega * t + particle.phase).cos())
}

/// Energy the co-oscillating detector observes, m omega^2 (eta1 - eta2)^2 / 2.
/// Zero exactly when the amplitudes coincide, no matter how large they are.
pub fn observed_energy(
    particle: &ClassicalOscillator,
    detector: &ClassicalOscillator,
) -> Result<f64, ClassicalError> {
    check_pair(particle, detector)?;
    let diff = particle.eta - detector.eta;
    Ok(0.5 * particle.mass * particle.omega * particle.omega * diff * diff)
}
