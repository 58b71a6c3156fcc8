//! Numerical search over all four measurement directions for the best
//! entangled payoff. Evidence only: the search never exceeds 9.
//!
//! ```sh
//! cargo run -p entangle-coord --example angle_search --release
//! ```

use entangle_coord::bounds::{best_equally_spaced_payoff, optimize_general_angles, quantum_bound};

fn main() -> entangle_coord::Result<()> {
    for resolution in [8, 16, 32] {
        let res = optimize_general_angles(resolution, 400)?;
        println!(
            "resolution {resolution:>2}: floored P = {:.6}, unfloored = {:?}, near degenerate = {}, evals = {}",
            res.floored_payoff, res.payoff, res.near_degenerate, res.evaluations
        );
        println!("    plan {:?}", res.plan);
        println!("    entangled bound slack {:.3e}", quantum_bound(&res.profile).slack);
    }

    println!("\nequally spaced family:");
    for floor in [1e-2, 1e-4, 1e-6, 1e-8] {
        println!("  floor {floor:e}: best P = {:.8}", best_equally_spaced_payoff(floor, 4000));
    }
    Ok(())
}
