//! Plugging a hand-written strategy into the arbiter. Any type that
//! implements `PlayerStrategy` can play; it sees only its own state and the
//! round context.
//!
//! ```sh
//! cargo run -p entangle-coord --example custom_strategy
//! ```

use entangle_coord::game::{RoundContext, TableStrategy};
use entangle_coord::{empirical_profile, run_match, uniform_schedule, Move, PlayerState, PlayerStrategy};

/// Plays a fixed table on even rounds and the opposite table on odd ones.
struct Alternating([Move; 2]);

impl PlayerStrategy for Alternating {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move {
        let m = self.0[state.index()];
        match (round.round_index % 2, m) {
            (0, m) => m,
            (_, Move::A) => Move::B,
            (_, Move::B) => Move::A,
        }
    }
}

fn main() -> entangle_coord::Result<()> {
    let schedule = uniform_schedule(1000)?;

    let one = Alternating([Move::A, Move::B]);
    let two = Alternating([Move::B, Move::B]);
    let profile = empirical_profile(&run_match(&one, &two, &schedule, 0))?;
    println!("alternating tables: {:?}", profile.to_array());

    let two = TableStrategy([Move::B, Move::B]);
    let profile = empirical_profile(&run_match(&one, &two, &schedule, 0))?;
    println!("alternating vs fixed: {:?}", profile.to_array());
    Ok(())
}
