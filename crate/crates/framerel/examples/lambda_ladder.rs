//! States and detectors on one ladder: measuring through shifted
//! observables returns differences of ladder positions.
//!
//! Run with: cargo run --example lambda_ladder

use framerel::numerics::OscillatorParams;
use framerel::oscillator::{eigenenergy, lambda_of, measure, EnergyEigenstate, FrameOffset};

fn main() {
    let params = OscillatorParams::natural();

    println!("ladder coordinates lambda_k = (2k+1) hbar/(m omega), natural units:");
    for k in 0..5u32 {
        println!(
            "   level {k}: lambda = {:.1}, energy = {:.1}",
            lambda_of(k, &params).value(),
            eigenenergy(EnergyEigenstate::new(k), &params)
        );
    }
    println!("   adjacent spacing is always 2.0");
    println!();

    println!(" n   ell   lambda outcome   spectral outcome");
    for (n, ell) in [(0u32, 0u32), (1, 0), (1, 1), (2, 0), (5, 2), (1, 3)] {
        let record = measure(EnergyEigenstate::new(n), FrameOffset::new(ell), &params);
        let spectral = match record.eigenvalue_outcome {
            Some(e) => format!("eps = {e:.1}"),
            None => "outside support".to_string(),
        };
        println!(
            " {n}    {ell}       {:+.1}           {spectral}",
            record.lambda_outcome
        );
    }
    println!();

    println!("the ground state (n=0) has energy 0.5 and sits at lambda = 1.0,");
    println!("but a detector on the same rung (ell=0) reads zero. Raising the");
    println!("detector to any rung ell makes the particle at n = ell read zero");
    println!("too: outcomes depend on n - ell only, never on the rung itself.");
    println!();

    // the zero-point offset never survives the subtraction
    let eps0 = eigenenergy(EnergyEigenstate::new(0), &params);
    for (n, ell) in [(3u32, 1u32), (7, 7), (10, 4)] {
        let record = measure(EnergyEigenstate::new(n), FrameOffset::new(ell), &params);
        let relative = record.eigenvalue_outcome.unwrap() - eps0;
        println!(
            "measure(n={n}, ell={ell}): eigenvalue - eps0 = {relative:.1} = (n-ell) hbar omega"
        );
    }
}
