//! Classical and entangled strategies for a two-player coordination game
//! with a common payoff and no communication during play.
//!
//! Each player sees only its own binary state and must choose move `A` or
//! `B`. The team scores when the moves differ much more often in state
//! (0,0) than in any other state pair:
//!
//! ```text
//! P = q00 / max(q01, q10, q11)
//! ```
//!
//! Shared classical randomness caps `P` at 3 ([`classical`],
//! [`bounds::lhv_supremum_payoff`]); shared spin singlets measured at
//! slightly rotated angles approach 9 ([`quantum`]).
//!
//! ```
//! use entangle_coord::{game::payoff, quantum::quantum_profile};
//!
//! let p = payoff(&quantum_profile(0.01).unwrap()).unwrap();
//! assert!((p - 8.9994).abs() < 1e-4);
//! ```

pub mod bounds;
pub mod classical;
pub mod error;
pub mod game;
pub mod harness;
pub mod quantum;
mod rng;

pub use error::{CoordError, Result};
pub use game::{
    empirical_profile, payoff, run_match, uniform_schedule, MismatchCounts, MismatchProfile, Move,
    PayoffMode, PayoffReport, Player, PlayerState, PlayerStrategy, RoundRecord, StatePair,
};
