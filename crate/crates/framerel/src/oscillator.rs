//! Quantum harmonic oscillator eigenstructure, position densities, shifted
//! commuting observables, and the lambda-coordinate outcome calculus.
//!
//! A detector is modeled as the shifted observable built from projectors
//! onto levels m + ell with eigenvalues eps_m: it sits on the same ladder
//! the states live on, at rung ell. Measuring level n through it returns
//! eps_(n-ell) in the spectral voice, or equivalently the lambda difference
//! lambda_n - lambda_ell = 2(n-ell) hbar/(m omega) in the positional voice.
//! Both are carried in [`MeasurementRecord`] and their consistency is an
//! enforced invariant: the lambda difference carries no zero-point offset.

use crate::numerics::{self, Grid, NumericsError};
use serde::{Deserialize, Serialize};

pub use crate::numerics::OscillatorParams;

/// Energy eigenstate |eps_n> of a single oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyEigenstate {
    pub level: u32,
}

impl EnergyEigenstate {
    pub fn new(level: u32) -> Self {
        Self { level }
    }
}

/// Ladder offset ell of a shifted commuting observable — the rung the
/// detector itself sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameOffset {
    pub ell: u32,
}

impl FrameOffset {
    pub fn new(ell: u32) -> Self {
        Self { ell }
    }
}

/// Ladder position (2k+1) hbar/(m omega), the mean-square-position
/// coordinate shared by states and detector frames alike.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaVector {
    value: f64,
}

impl LambdaVector {
    pub fn value(&self) -> f64 {
        self.value
    }
}

/// Outcome of measuring an eigenstate through a shifted observable.
///
/// When the state lies below the frame's rung (n < ell) the observable has
/// no support there: `in_support` is false, the spectral outcome is absent,
/// and only the signed lambda difference remains defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub frame: FrameOffset,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalue_outcome: Option<f64>,
    pub lambda_outcome: f64,
    pub in_support: bool,
}

/// eps_n = (n + 1/2) hbar omega.
pub fn eigenenergy(state: EnergyEigenstate, params: &OscillatorParams) -> f64 {
    (state.level as f64 + 0.5) * params.hbar * params.omega
}

/// Position-space density |<x|eps_n>|^2 = psi_n(x)^2.
pub fn position_density(
    state: EnergyEigenstate,
    x: f64,
    params: &OscillatorParams,
) -> Result<f64, NumericsError> {
    let psi = numerics::hermite_psi(state.level, x, params)?;
    Ok(psi * psi)
}

/// Density sampled over a grid, one (x, density) pair per grid point.
pub fn density_grid(
    state: EnergyEigenstate,
    grid: &Grid,
    params: &OscillatorParams,
) -> Result<Vec<(f64, f64)>, NumericsError> {
    grid.values()
        .into_iter()
        .map(|x| position_density(state, x, params).map(|d| (x, d)))
        .collect()
}

/// <eps_n| x^2 |eps_n> = (2n+1) hbar / (2 m omega).
pub fn x2_expectation(state: EnergyEigenstate, params: &OscillatorParams) -> f64 {
    (2.0 * state.level as f64 + 1.0) * params.hbar / (2.0 * params.mass * params.omega)
}

/// Ladder coordinate (2k+1) hbar/(m omega). The same map serves states
/// (lambda_n) and detector frames (lambda'_ell): both live on one ladder.
pub fn lambda_of(level: u32, params: &OscillatorParams) -> LambdaVector {
    LambdaVector {
        value: (2.0 * level as f64 + 1.0) * params.hbar / (params.mass * params.omega),
    }
}

/// Measure eigenstate n through the shifted observable at offset ell.
///
/// Outcomes depend only on n - ell. Out-of-support (n < ell) is a modeled
/// result, not an error: the signed lambda difference stays defined so that
/// multimode scenario tables remain total.
pub fn measure(
    state: EnergyEigenstate,
    frame: FrameOffset,
    params: &OscillatorParams,
) -> MeasurementRecord {
    let diff = state.level as i64 - frame.ell as i64;
    let lambda_outcome = 2.0 * diff as f64 * params.hbar / (params.mass * params.omega);
    let eigenvalue_outcome = if diff >= 0 {
        Some((diff as f64 + 0.5) * params.hbar * params.omega)
    } else {
        None
    };
    MeasurementRecord {
        frame,
        eigenvalue_outcome,
        lambda_outcome,
        in_support: diff >= 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn natural() -> OscillatorParams {
        OscillatorParams::natural()
    }

    #[test]
    fn eigenenergies() {
        let p = natural();
        assert_eq!(eigenenergy(EnergyEigenstate::new(0), &p), 0.5);
        assert_eq!(eigenenergy(EnergyEigenstate::new(10), &p), 10.5);
        let q = OscillatorParams::new(1.0, 2.0, 1.0).unwrap();
        assert_eq!(eigenenergy(EnergyEigenstate::new(3), &q), 7.0);
    }

    #[test]
    fn density_values_match_closed_forms() {
        let p = natural();
        // ground state at the origin: 1/sqrt(pi)
        assert_abs_diff_eq!(
            position_density(EnergyEigenstate::new(0), 0.0, &p).unwrap(),
            0.5641895835477563,
            epsilon = 1e-14
        );
        assert_eq!(position_density(EnergyEigenstate::new(1), 0.0, &p).unwrap(), 0.0);
        // first level at x = 1: (2/sqrt(pi)) e^(-1)
        assert_abs_diff_eq!(
            position_density(EnergyEigenstate::new(1), 1.0, &p).unwrap(),
            0.4151074974205947,
            epsilon = 1e-13
        );
    }

    fn count_strict_maxima(densities: &[f64]) -> usize {
        densities
            .windows(3)
            .filter(|w| w[1] > w[0] && w[1] > w[2])
            .count()
    }

    fn count_sign_changes(values: &[f64]) -> usize {
        let signs: Vec<f64> = values
            .iter()
            .copied()
            .filter(|v| *v != 0.0)
            .map(f64::signum)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    #[test]
    fn density_grid_shapes_match_the_first_four_levels() {
        let p = natural();
        let grid = Grid::new(-5.0, 5.0, 401).unwrap();
        for (n, maxima) in [(0u32, 1usize), (1, 2), (2, 3), (3, 4)] {
            let table = density_grid(EnergyEigenstate::new(n), &grid, &p).unwrap();
            assert_eq!(table.len(), 401);
            let dens: Vec<f64> = table.iter().map(|(_, d)| *d).collect();
            assert_eq!(count_strict_maxima(&dens), maxima, "level {n}");
            let psis: Vec<f64> = grid
                .values()
                .iter()
                .map(|&x| numerics::hermite_psi(n, x, &p).unwrap())
                .collect();
            assert_eq!(count_sign_changes(&psis), n as usize, "level {n}");
        }
        // level 0 peaks at the origin
        let table = density_grid(EnergyEigenstate::new(0), &grid, &p).unwrap();
        let peak = table
            .iter()
            .cloned()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        assert_eq!(peak.0, 0.0);
    }

    #[test]
    fn x2_closed_form_and_quadrature_agree() {
        let p = natural();
        assert_eq!(x2_expectation(EnergyEigenstate::new(0), &p), 0.5);
        assert_eq!(x2_expectation(EnergyEigenstate::new(2), &p), 2.5);

        // quadrature oracle: integrate x^2 psi_2(x)^2 with the polynomial
        // factors against the Gauss-Hermite weight
        let rule = numerics::gauss_hermite_rule(64).unwrap();
        let quad = rule.integrate(|u| {
            let h = numerics::hermite_poly(2, u);
            u * u * h * h
        });
        assert_abs_diff_eq!(quad, 2.5, epsilon = 1e-6);
    }

    #[test]
    fn virial_identity() {
        for n in 0..=30 {
            for params in [natural(), OscillatorParams::new(1.7, 0.4, 2.2).unwrap()] {
                let state = EnergyEigenstate::new(n);
                let potential = 0.5 * params.mass * params.omega * params.omega
                    * x2_expectation(state, &params);
                assert_abs_diff_eq!(
                    potential,
                    eigenenergy(state, &params) / 2.0,
                    epsilon = 1e-12 * eigenenergy(state, &params)
                );
            }
        }
    }

    #[test]
    fn lambda_ladder() {
        let p = natural();
        assert_eq!(lambda_of(0, &p).value(), 1.0);
        assert_eq!(lambda_of(1, &p).value(), 3.0);
        assert_eq!(lambda_of(1, &p).value() - lambda_of(0, &p).value(), 2.0);
    }

    #[test]
    fn measurement_scenarios_from_the_ladder() {
        let p = natural();
        // particle and detector both at the ground rung: outcome zero, yet
        // the spectral value is the non-zero eps_0
        let r = measure(EnergyEigenstate::new(0), FrameOffset::new(0), &p);
        assert!(r.in_support);
        assert_eq!(r.lambda_outcome, 0.0);
        assert_eq!(r.eigenvalue_outcome, Some(0.5));

        // particle one rung above the detector
        let r = measure(EnergyEigenstate::new(1), FrameOffset::new(0), &p);
        assert_eq!(r.lambda_outcome, 2.0);

        // detector raised to the particle's rung: back to zero
        let r = measure(EnergyEigenstate::new(1), FrameOffset::new(1), &p);
        assert_eq!(r.lambda_outcome, 0.0);
        assert_eq!(r.eigenvalue_outcome, Some(0.5));

        let r = measure(EnergyEigenstate::new(5), FrameOffset::new(2), &p);
        assert_eq!(r.eigenvalue_outcome, Some(3.5));
    }

    #[test]
    fn below_support_keeps_signed_lambda() {
        let p = natural();
        let r = measure(EnergyEigenstate::new(1), FrameOffset::new(3), &p);
        assert!(!r.in_support);
        assert_eq!(r.eigenvalue_outcome, None);
        assert_eq!(r.lambda_outcome, -4.0);
    }

    #[test]
    fn lambda_and_eigenvalue_outcomes_are_consistent() {
        for params in [natural(), OscillatorParams::new(0.5, 3.0, 1.7).unwrap()] {
            let eps0 = eigenenergy(EnergyEigenstate::new(0), &params);
            for n in 0..=12u32 {
                for ell in 0..=n {
                    let r = measure(EnergyEigenstate::new(n), FrameOffset::new(ell), &params);
                    let from_spectral = 2.0 * (r.eigenvalue_outcome.unwrap() - eps0)
                        / (params.mass * params.omega * params.omega);
                    let scale = r.lambda_outcome.abs().max(1.0);
                    assert_abs_diff_eq!(
                        r.lambda_outcome,
                        from_spectral,
                        epsilon = 1e-12 * scale
                    );
                }
            }
        }
    }

    #[test]
    fn density_normalizes_up_to_level_30() {
        // Gauss-Hermite with the weight folded into the polynomial factors
        let rule = numerics::gauss_hermite_rule(64).unwrap();
        for n in 0..=30u32 {
            let total = rule.integrate(|u| {
                let h = numerics::hermite_poly(n, u);
                h * h
            });
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-8);
        }
    }
}
