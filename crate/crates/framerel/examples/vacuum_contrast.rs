//! The naive vacuum energy grows without bound in the mode count while a
//! matched detector array measures zero on every mode.
//!
//! Run with: cargo run --example vacuum_contrast

use framerel::field::{
    mode_outcomes, state_from_counts, total_relative_energy, total_state_energy,
    vacuum_energy_partial_sum, DetectionRecord, ModeSet, MultimodeFrame, MultimodeState,
};
use framerel::numerics::OscillatorParams;

fn main() {
    let params = OscillatorParams::natural();

    println!("vacuum partial sums, natural units (hbar omega / 2 per mode):");
    for m in [1usize, 10, 1_000, 1_000_000] {
        let sum = vacuum_energy_partial_sum(m, &params);
        let modes = ModeSet::uniform(m, params).unwrap();
        let measured = total_relative_energy(
            &MultimodeState::vacuum(m),
            &MultimodeFrame::ground(m),
            &modes,
        )
        .unwrap();
        println!("   M = {m:>9}: summed zero-point {sum:>10.1}, detectors read {measured:.1}");
    }
    println!();

    // a single excitation against the matched-everywhere background
    let m = 3;
    let modes = ModeSet::uniform(m, params).unwrap();
    let excited = MultimodeState::new(vec![1, 0, 0]);
    let frame = MultimodeFrame::ground(m);
    let records = mode_outcomes(&excited, &frame, &modes).unwrap();
    println!("one photon in the first of {m} modes, detectors at the ground rung:");
    for (k, record) in records.iter().enumerate() {
        println!("   detector {k}: lambda outcome {:+.1}", record.lambda_outcome);
    }
    println!(
        "   total relative energy {:.1} (absolute energy {:.1} includes {:.1} of zero-point)",
        total_relative_energy(&excited, &frame, &modes).unwrap(),
        total_state_energy(&excited, &modes).unwrap(),
        vacuum_energy_partial_sum(m, &params),
    );
    println!();

    // detectors raised to match a raised state read zero again
    let raised_state = MultimodeState::new(vec![0, 2, 0]);
    let raised_frame = MultimodeFrame::new(vec![0, 2, 0]);
    let records = mode_outcomes(&raised_state, &raised_frame, &modes).unwrap();
    let lambdas: Vec<f64> = records.iter().map(|r| r.lambda_outcome).collect();
    println!("state (0,2,0) seen by detectors at (0,2,0): outcomes {lambdas:?}");
    println!();

    // photon counting realizes the shifted observables
    let counts = DetectionRecord::new(vec![3, 0, 1]);
    let offsets = MultimodeFrame::new(vec![1, 0, 0]);
    let state = state_from_counts(&counts, &offsets).unwrap();
    println!(
        "counts {:?} under frame offsets {:?} identify the state {:?}",
        counts.counts, offsets.offsets, state.occupations
    );
}
