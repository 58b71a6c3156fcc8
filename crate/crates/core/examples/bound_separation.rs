//! Classical vs entangled bound on random measurement plans and on the
//! equally spaced plan.
//!
//! ```sh
//! cargo run -p entangle-coord --example bound_separation
//! ```

use std::f64::consts::TAU;

use entangle_coord::bounds::{classical_bound, quantum_bound};
use entangle_coord::quantum::{general_quantum_profile, quantum_profile, GeneralAnglePlan};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> entangle_coord::Result<()> {
    println!("delta   classical slack   entangled slack");
    for delta in [0.05, 0.1, 0.2, 0.3, 0.5] {
        let p = quantum_profile(delta)?;
        println!("{delta:<6}  {:+.6e}     {:+.6e}", classical_bound(&p).slack, quantum_bound(&p).slack);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut violated, mut min_slack) = (0, f64::INFINITY);
    let trials = 100_000;
    for _ in 0..trials {
        let plan = GeneralAnglePlan {
            a0: rng.gen_range(0.0..TAU),
            a1: rng.gen_range(0.0..TAU),
            b0: rng.gen_range(0.0..TAU),
            b1: rng.gen_range(0.0..TAU),
        };
        let p = general_quantum_profile(&plan);
        violated += usize::from(!classical_bound(&p).holds);
        min_slack = min_slack.min(quantum_bound(&p).slack);
    }
    println!("\n{trials} random plans: {violated} break the classical bound, min entangled slack {min_slack:.3e}");
    Ok(())
}
