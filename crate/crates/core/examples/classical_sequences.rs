//! Build the four shared sequences, check their Hamming distances and play
//! one full cycle of the game with them. Then repeat with the binary
//! symmetric channel variant for decreasing crossover probability.
//!
//! ```sh
//! cargo run -p entangle-coord --example classical_sequences --release
//! ```

use entangle_coord::classical::{
    analytic_classical_profile, classical_strategy_pair, generate_sequences, ChannelMode, ClassicalConfig,
};
use entangle_coord::{run_match, uniform_schedule, MismatchCounts, Result};

fn play(config: &ClassicalConfig) -> Result<MismatchCounts> {
    let sequences = generate_sequences(config)?;
    let (one, two) = classical_strategy_pair(sequences);
    let records = run_match(&one, &two, &uniform_schedule(config.len)?, config.seed);
    Ok(MismatchCounts::from_records(&records))
}

fn main() -> Result<()> {
    let config = ClassicalConfig::new(10_000, 0.1, ChannelMode::DisjointFlips, 1);
    let sequences = generate_sequences(&config)?;
    println!("disjoint flips, N = {}, F = {}", config.len, config.flip_count());
    for a in 0..4 {
        let row: Vec<String> = (0..4).map(|b| format!("{:>5}", sequences.distance(a, b))).collect();
        println!("  d(X{a}, .) = {}", row.join(""));
    }
    let counts = play(&config)?;
    println!("  empirical profile {:?}", counts.profile()?.to_array());
    println!("  payoff {}", counts.payoff()?);

    println!("\nbinary symmetric channel chain, N = 10^6");
    for q in [0.1, 0.05, 0.01] {
        let counts = play(&ClassicalConfig::new(1_000_000, q, ChannelMode::BscChain, 2))?;
        let analytic = entangle_coord::payoff(&analytic_classical_profile(q, ChannelMode::BscChain)?)?;
        println!(
            "  q = {q:<5} empirical P = {:.4} +/- {:.4}   analytic {:.4}",
            counts.payoff()?,
            counts.payoff_standard_error()?,
            analytic
        );
    }
    Ok(())
}
