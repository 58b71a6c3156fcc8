//! Play the entangled strategy: each round consumes one singlet, each
//! player measures along a direction chosen from its own state.
//!
//! ```sh
//! cargo run -p entangle-coord --example singlet_protocol --release
//! ```

use entangle_coord::quantum::{
    quantum_player_strategy, quantum_profile, sample_joint_outcomes, AnglePlan, SingletSampler,
};
use entangle_coord::{run_match, uniform_schedule, MismatchCounts, PayoffReport, Player, Result, StatePair};

fn main() -> Result<()> {
    let delta = 0.2;
    let plan = AnglePlan::new(delta)?;
    let analytic = quantum_profile(delta)?;
    let rounds = 1_000_000;

    let (one, two) = quantum_player_strategy(&plan);
    let records = run_match(&one, &two, &uniform_schedule(rounds)?, 2004);
    let counts = MismatchCounts::from_records(&records);
    let empirical = counts.profile()?;
    let se = counts.standard_errors()?;

    println!("delta = {delta}, {rounds} rounds per state pair");
    println!("pair    analytic    empirical   z");
    for pair in StatePair::ALL {
        let k = pair.index();
        let z = (empirical.get(pair) - analytic.get(pair)) / se[k];
        println!("{pair}   {:.7}   {:.7}   {z:+.2}", analytic.get(pair), empirical.get(pair));
    }
    let report = PayoffReport::empirical(&counts)?;
    println!(
        "payoff: analytic {:.5}, empirical {:.5} +/- {:.5} (95%)",
        entangle_coord::payoff(&analytic)?,
        report.payoff,
        report.confidence_halfwidth
    );

    // the same statistic drawn straight from the joint distribution
    let general = plan.to_general();
    let pair = StatePair::ALL[0];
    let counts = sample_joint_outcomes(
        general.direction(Player::One, pair.player_one),
        general.direction(Player::Two, pair.player_two),
        rounds as u64,
        &SingletSampler { seed: 7 },
    )?;
    println!("direct joint sampling at (0,0): {counts:?}, mismatch {:.7}", counts.mismatch_fraction());
    Ok(())
}
