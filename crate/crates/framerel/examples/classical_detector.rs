//! A detector riding its own oscillator measures only the relative
//! amplitude.
//!
//! Run with: cargo run --example classical_detector

use framerel::classical::{observed_energy, position_at, relative_position_at, ClassicalOscillator};

fn main() {
    let particle = ClassicalOscillator::new(1.0, 1.0, 0.0, 1.0).unwrap();

    println!("particle: x(t) = {} cos({} t)", particle.eta, particle.omega);
    println!();

    // sweep detector amplitudes up to the particle's own
    println!("detector eta2   observed energy   (particle energy stays 0.5)");
    for eta2 in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let detector = ClassicalOscillator::new(eta2, 1.0, 0.0, 1.0).unwrap();
        let energy = observed_energy(&particle, &detector).unwrap();
        println!("   {eta2:.2}            {energy:.4}");
    }
    println!();

    // equal amplitudes: the relative coordinate vanishes at every instant
    let detector = ClassicalOscillator::new(1.0, 1.0, 0.0, 1.0).unwrap();
    println!("equal amplitudes, sampled over one period:");
    println!("   t       x(t)      y(t)      x-y");
    for i in 0..7 {
        let t = i as f64;
        println!(
            "   {t:.1}   {:+.4}   {:+.4}   {:+.4}",
            position_at(&particle, t),
            position_at(&detector, t),
            relative_position_at(&particle, &detector, t).unwrap(),
        );
    }
    println!();
    println!("the particle's mechanical energy is 0.5 the whole time;");
    println!("a detector swinging along with it observes exactly zero.");
}
