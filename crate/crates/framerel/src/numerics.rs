//! Numerically stable Hermite-Gauss eigenfunction evaluation and quadrature
//! primitives.
//!
//! Eigenfunctions are evaluated through the normalized three-term recurrence
//!
//! ```text
//! psi_{n+1}(u) = sqrt(2/(n+1)) * u * psi_n(u) - sqrt(n/(n+1)) * psi_{n-1}(u)
//! ```
//!
//! in the dimensionless coordinate `u = x * sqrt(m*omega/hbar)`, so no
//! intermediate quantity ever reaches the 2^n n! scale that overflows the
//! naive Hermite-polynomial formula. All public signatures take physical `x`
//! and [`OscillatorParams`]; the rescaling happens internally.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Highest eigenstate level evaluated by default. Beyond this the double
/// precision tails degrade; use [`hermite_psi_with_cap`] to raise it.
pub const DEFAULT_LEVEL_CAP: u32 = 60;

/// Largest Gauss-Hermite rule size supported.
pub const MAX_QUADRATURE_COUNT: usize = 256;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("eigenstate level {level} exceeds the cap {cap}")]
    LevelAboveCap { level: u32, cap: u32 },
    #[error("oscillator parameter {name} must be strictly positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("quadrature count {count} outside supported range 1..={max}")]
    QuadratureCountOutOfRange { count: usize, max: usize },
    #[error("grid bounds must satisfy x_min < x_max, got [{x_min}, {x_max}]")]
    InvalidGridBounds { x_min: f64, x_max: f64 },
    #[error("grid needs at least 2 points, got {points}")]
    TooFewGridPoints { points: usize },
    #[error("value list length {values} does not match grid points {points}")]
    GridLengthMismatch { values: usize, points: usize },
}

/// Physical constants (m, omega, hbar) defining one oscillator or mode.
///
/// Defaults to natural units m = omega = hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self, NumericsError> {
        for (name, value) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if value <= 0.0 || !value.is_finite() {
                return Err(NumericsError::NonPositiveParameter { name, value });
            }
        }
        Ok(Self { mass, omega, hbar })
    }

    /// Natural units m = omega = hbar = 1.
    pub fn natural() -> Self {
        Self::default()
    }

    /// The squared inverse oscillator length m*omega/hbar.
    pub fn inverse_length_sq(&self) -> f64 {
        self.mass * self.omega / self.hbar
    }

    fn validate(&self) -> Result<(), NumericsError> {
        Self::new(self.mass, self.omega, self.hbar).map(|_| ())
    }
}

/// Uniform position-space grid on [x_min, x_max].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self, NumericsError> {
        if x_min >= x_max || !x_min.is_finite() || !x_max.is_finite() {
            return Err(NumericsError::InvalidGridBounds { x_min, x_max });
        }
        if points < 2 {
            return Err(NumericsError::TooFewGridPoints { points });
        }
        Ok(Self { x_min, x_max, points })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }

    /// i-th grid point. Computed so that the endpoints are exact and a
    /// symmetric grid with an odd point count hits x = 0 exactly.
    pub fn x(&self, i: usize) -> f64 {
        let frac = i as f64 / (self.points - 1) as f64;
        self.x_min + (self.x_max - self.x_min) * frac
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.x(i)).collect()
    }
}

/// Nodes and weights integrating f against the e^(-x^2) weight on the line.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sum w_i * f(x_i), an estimate of the integral of e^(-x^2) f(x).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

fn check_level(n: u32, cap: u32) -> Result<(), NumericsError> {
    if n > cap {
        return Err(NumericsError::LevelAboveCap { level: n, cap });
    }
    Ok(())
}

/// Orthonormal Hermite polynomial h_n(u) = H_n(u) / sqrt(2^n n! sqrt(pi)),
/// the polynomial factor of the dimensionless eigenfunction. These satisfy
/// sum_i w_i h_m(x_i) h_n(x_i) = delta_mn under a Gauss-Hermite rule, which
/// is how integrals of eigenfunction products are done without forming the
/// huge e^(x^2) reweighting factor.
pub fn hermite_poly(n: u32, u: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * u * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// L2-normalized n-th eigenfunction value psi_n(x) with the default level cap.
pub fn hermite_psi(n: u32, x: f64, params: &OscillatorParams) -> Result<f64, NumericsError> {
    hermite_psi_with_cap(n, x, params, DEFAULT_LEVEL_CAP)
}

/// Same as [`hermite_psi`] with a caller-chosen level cap.
pub fn hermite_psi_with_cap(
    n: u32,
    x: f64,
    params: &OscillatorParams,
    cap: u32,
) -> Result<f64, NumericsError> {
    check_level(n, cap)?;
    params.validate()?;
    let scale = params.inverse_length_sq();
    let u = x * scale.sqrt();
    // same product order as hermite_psi_all so the two paths agree bitwise
    let amplitude = scale.powf(0.25) * (-0.5 * u * u).exp();
    Ok(amplitude * hermite_poly(n, u))
}

/// psi_0(x) .. psi_max(x) in one recurrence pass. Used by the likelihood
/// classifier, which needs every candidate level at every sample.
pub fn hermite_psi_all(
    max: u32,
    x: f64,
    params: &OscillatorParams,
) -> Result<Vec<f64>, NumericsError> {
    check_level(max, DEFAULT_LEVEL_CAP)?;
    params.validate()?;
    let scale = params.inverse_length_sq();
    let u = x * scale.sqrt();
    let amplitude = scale.powf(0.25) * (-0.5 * u * u).exp();

    let mut out = Vec::with_capacity(max as usize + 1);
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    out.push(amplitude * cur);
    for k in 0..max {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * u * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(amplitude * cur);
    }
    Ok(out)
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit-shift QL
/// algorithm. `d` holds the diagonal, `e[i]` couples rows i and i+1 with
/// `e[n-1]` unused scratch.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 60, "tridiagonal QL did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let signed_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut collapsed = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    collapsed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let t = (d[i] - g) * s + 2.0 * c * b;
                p = s * t;
                d[i + 1] = g + p;
                g = c * t - b;
            }
            if collapsed {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

/// h_n(z) together with its derivative sqrt(2n) h_{n-1}(z).
fn hermite_poly_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p_prev = 0.0;
    let mut p_cur = PI.powf(-0.25);
    for j in 1..=n {
        let jf = j as f64;
        let p_next = (2.0 / jf).sqrt() * z * p_cur - ((jf - 1.0) / jf).sqrt() * p_prev;
        p_prev = p_cur;
        p_cur = p_next;
    }
    (p_cur, (2.0 * n as f64).sqrt() * p_prev)
}

/// Gauss-Hermite nodes and weights for the e^(-x^2) weight. Nodes are the
/// eigenvalues of the Golub-Welsch Jacobi matrix, polished by Newton on the
/// orthonormal recurrence; weights come from the derivative identity
/// w = 2 / h_n'(x)^2. Nodes come out strictly increasing and symmetric; a
/// rule of size `count` integrates polynomials of degree 2*count - 1
/// exactly.
pub fn gauss_hermite_rule(count: usize) -> Result<QuadratureRule, NumericsError> {
    if !(1..=MAX_QUADRATURE_COUNT).contains(&count) {
        return Err(NumericsError::QuadratureCountOutOfRange {
            count,
            max: MAX_QUADRATURE_COUNT,
        });
    }

    let n = count;
    // Jacobi matrix of the orthonormal Hermite recurrence: zero diagonal,
    // off-diagonal sqrt(j/2)
    let mut d = vec![0.0; n];
    let mut e: Vec<f64> = (1..=n).map(|j| (j as f64 / 2.0).sqrt()).collect();
    e[n - 1] = 0.0;
    tridiagonal_eigenvalues(&mut d, &mut e);
    d.sort_by(f64::total_cmp);

    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for (i, &eig) in d.iter().enumerate() {
        let mut z = eig;
        let mut deriv = 1.0;
        for _ in 0..4 {
            let (value, dv) = hermite_poly_with_derivative(n, z);
            deriv = dv;
            let step = value / dv;
            z -= step;
            if step.abs() <= 1e-15 * (1.0 + z.abs()) {
                break;
            }
        }
        nodes[i] = z;
        weights[i] = 2.0 / (deriv * deriv);
    }

    // the rule is symmetric; make the output exactly so
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let magnitude = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -magnitude;
        nodes[j] = magnitude;
        let w = 0.5 * (weights[i] + weights[j]);
        weights[i] = w;
        weights[j] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }

    Ok(QuadratureRule { nodes, weights })
}

/// Composite trapezoid estimate of the integral of sampled values over the
/// grid span.
pub fn integrate_on_grid(values: &[f64], grid: &Grid) -> Result<f64, NumericsError> {
    if values.len() != grid.points() {
        return Err(NumericsError::GridLengthMismatch {
            values: values.len(),
            points: grid.points(),
        });
    }
    let h = grid.spacing();
    let interior: f64 = values[1..values.len() - 1].iter().sum();
    Ok(h * (0.5 * values[0] + interior + 0.5 * values[values.len() - 1]))
}
