//! Entangled payoff as a function of the angle step, approaching 9 as the
//! step shrinks. Prints CSV suitable for plotting.
//!
//! ```sh
//! cargo run -p entangle-coord --example payoff_sweep > sweep.csv
//! ```

use entangle_coord::bounds::{classical_bound, sweep_quantum_payoff};

fn main() -> entangle_coord::Result<()> {
    let table = sweep_quantum_payoff(0.01, 1.0, 100)?;
    println!("delta,q00,q01,payoff,classical_slack");
    for row in &table.rows {
        println!(
            "{:.4},{:.9},{:.9},{:.6},{:.9}",
            row.delta,
            row.profile.q00,
            row.profile.q01,
            row.payoff,
            classical_bound(&row.profile).slack
        );
    }
    for delta in [1e-1, 1e-2, 1e-3, 1e-4] {
        let table = sweep_quantum_payoff(delta, 2.0 * delta, 2)?;
        eprintln!("delta = {delta:e}: 9 - P = {:.3e}", 9.0 - table.rows[0].payoff);
    }
    Ok(())
}
