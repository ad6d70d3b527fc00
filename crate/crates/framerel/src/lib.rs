//! # framerel
//!
//! Numerical toolkit for measurements whose reference frames are themselves
//! built from observables. A detector is not an external bystander: it
//! occupies one of the same states the measured system can occupy, and every
//! outcome it registers is the *difference* between the system's ladder
//! position and its own. The library works this idea through four settings
//! of increasing structure:
//!
//! - [`classical`] — a detector riding its own harmonic oscillator reads
//!   only the amplitude difference, so a particle with plenty of energy can
//!   register exactly zero.
//! - [`bloch`] — qubit states and spin observables as unit vectors on one
//!   sphere; the +-1 eigenvalue says "same or opposite as the frame", never
//!   "up or down" absolutely.
//! - [`oscillator`] — harmonic-oscillator eigenstates, their position
//!   densities, and shifted commuting observables that put the detector on
//!   rung `ell` of the same ladder; outcomes depend only on `n - ell`.
//! - [`field`] — many decoupled modes measured by photon-number detector
//!   arrays: the naive vacuum sum M*hbar*omega/2 grows without bound while
//!   matched detectors read zero on every mode.
//!
//! [`numerics`] supplies the stable Hermite-Gauss evaluation and quadrature
//! underneath, and [`sampling`] turns densities into reproducible Monte
//! Carlo draws plus a maximum-likelihood level classifier.
//!
//! ## Examples
//!
//! One runnable example per capability:
//!
//! ```bash
//! cargo run --example classical_detector   # co-oscillating detector reads zero
//! cargo run --example qubit_frames         # +-1 outcomes relative to the frame
//! cargo run --example figure1_densities    # first four position densities
//! cargo run --example lambda_ladder        # shifted observables on the ladder
//! cargo run --example vacuum_contrast      # divergent sum vs zero readings
//! cargo run --example sample_and_infer     # draw positions, identify the level
//! ```
//!
//! ## Command line
//!
//! The `framerel` binary exposes the same scenarios as subcommands emitting
//! deterministic CSV/JSON:
//!
//! ```bash
//! framerel figure1 --points 401 --out figure1.csv
//! framerel qubit measure --theta 0 --phi 0 --frame-theta 3.141592653589793 --frame-phi 0
//! framerel classical demo --eta1 1 --eta2 1
//! framerel oscillator measure --n 1 --ell 1
//! framerel field scenario --config scenario.json
//! framerel sample --n 3 --count 20000 --seed 42 > batch.csv
//! framerel infer --input batch.csv --max-level 8
//! ```
//!
//! Natural units m = omega = hbar = 1 are the default everywhere.

pub mod bloch;
pub mod classical;
pub mod cli;
pub mod field;
pub mod numerics;
pub mod oscillator;
pub mod sampling;

pub use bloch::{BlochVector, SpinMeasurement, SpinOutcome};
pub use classical::ClassicalOscillator;
pub use field::{DetectionRecord, ModeSet, MultimodeFrame, MultimodeState};
pub use numerics::{Grid, OscillatorParams, QuadratureRule};
pub use oscillator::{EnergyEigenstate, FrameOffset, LambdaVector, MeasurementRecord};
pub use sampling::SampleBatch;
