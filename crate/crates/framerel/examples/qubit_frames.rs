//! The +-1 eigenvalue of a spin measurement is relative to the frame
//! direction, not an absolute up/down.
//!
//! Run with: cargo run --example qubit_frames

use framerel::bloch::{
    expectation, interpret, outcome_probabilities, BlochVector, SpinMeasurement, SpinOutcome,
};

fn show(v: &BlochVector) -> String {
    // adding 0.0 turns -0.0 into +0.0 for display
    format!("({:+.0}, {:+.0}, {:+.0})", v.nx + 0.0, v.ny + 0.0, v.nz + 0.0)
}

fn main() {
    // a spin prepared pointing up along z
    let state = BlochVector::plus_z();
    println!("state prepared along {}", show(&state));
    println!();

    for (label, frame) in [("+z", BlochVector::plus_z()), ("-z", BlochVector::minus_z())] {
        let value = expectation(&state, &frame);
        let (p_plus, p_minus) = outcome_probabilities(&state, &frame);
        let outcome = if value > 0.0 { SpinOutcome::Plus } else { SpinOutcome::Minus };
        let inferred = interpret(&SpinMeasurement { frame, outcome });
        println!("frame {label} {}:", show(&frame));
        println!("   expectation        {value:+.0}");
        println!("   P(+1) = {p_plus:.0}, P(-1) = {p_minus:.0}");
        println!(
            "   certain outcome    {:+.0}  ->  inferred spin {}",
            outcome.value(),
            show(&inferred)
        );
        println!();
    }

    println!("identically prepared spins, opposite eigenvalues -- yet both");
    println!("frames conclude the spin points up. The outcome only says");
    println!("\"same direction as the frame\" (+1) or \"opposite\" (-1).");

    // an equatorial frame makes the same point statistically
    let equator = BlochVector::new(1.0, 0.0, 0.0).unwrap();
    let (p_plus, p_minus) = outcome_probabilities(&state, &equator);
    println!();
    println!(
        "orthogonal frame {}: P(+1) = {:.2}, P(-1) = {:.2} (no information)",
        show(&equator),
        p_plus,
        p_minus
    );
}
