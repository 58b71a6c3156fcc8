//! The payoff functional on a few hand-written mismatch profiles.
//!
//! ```sh
//! cargo run -p entangle-coord --example payoff_basics
//! ```

use entangle_coord::{payoff, CoordError, MismatchProfile, PayoffReport};

fn main() -> Result<(), CoordError> {
    let cases = [
        ("classical construction, q = 0.1", [0.3, 0.1, 0.1, 0.1]),
        ("always mismatch", [0.5, 0.5, 0.5, 0.5]),
        ("singlets, delta = 0.1", [0.022_331_755, 0.002_497_917, 0.002_497_917, 0.002_497_917]),
    ];
    for (label, q) in cases {
        let report = PayoffReport::analytic(MismatchProfile::from_array(q)?)?;
        println!("{label:<34} P = {:.6}", report.payoff);
    }

    match payoff(&MismatchProfile::new(0.0, 0.0, 0.0, 0.0)?) {
        Err(CoordError::DegenerateProfile) => println!("{:<34} undefined (0/0)", "all zero"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
