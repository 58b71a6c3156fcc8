//! Entangled strategy: players share one spin singlet per round and each
//! measures its half in the XY plane along a direction picked from its own
//! state. A positive projection plays `A`, a negative one plays `B`.
//!
//! For directions `a` (player one) and `b` (player two) the singlet gives
//!
//! ```text
//! P(s, t) = (1 - s t cos(b - a)) / 4,   s, t in {+1, -1}
//! ```
//!
//! so the two moves differ with probability `(1 + cos(b - a)) / 2`.
//! Player two measures along `pi + phi`, which turns this into
//! `(1 - cos(phi - a)) / 2`.

use std::cell::Cell;
use std::f64::consts::PI;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CoordError, Result};
use crate::game::{MismatchProfile, Move, Player, PlayerState, PlayerStrategy, RoundContext, StatePair};
use crate::rng::{derived_rng, DOMAIN_SAMPLER, DOMAIN_SINGLET};

/// Equally spaced plan: `phi_k = k * delta` for `k = 0..=3`.
///
/// Player one measures along `phi_0` in state 0 and `phi_2` in state 1.
/// Player two measures along `pi + phi_3` in state 0 and `pi + phi_1` in
/// state 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnglePlan {
    delta: f64,
}

impl AnglePlan {
    pub fn new(delta: f64) -> Result<Self> {
        if !delta.is_finite() {
            return Err(CoordError::invalid(format!("delta must be finite, got {delta}")));
        }
        Ok(AnglePlan { delta })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn angles(&self) -> [f64; 4] {
        std::array::from_fn(|k| k as f64 * self.delta)
    }

    pub fn to_general(&self) -> GeneralAnglePlan {
        let phi = self.angles();
        GeneralAnglePlan {
            a0: phi[0],
            a1: phi[2],
            b0: PI + phi[3],
            b1: PI + phi[1],
        }
    }

    pub fn direction(&self, player: Player, state: PlayerState) -> f64 {
        self.to_general().direction(player, state)
    }
}

impl From<AnglePlan> for GeneralAnglePlan {
    fn from(plan: AnglePlan) -> Self {
        plan.to_general()
    }
}

/// Arbitrary measurement directions: `a0`/`a1` for player one in state
/// 0/1, `b0`/`b1` for player two. Angles are the actual directions, so any
/// `pi` offset is already included in `b0` and `b1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralAnglePlan {
    pub a0: f64,
    pub a1: f64,
    pub b0: f64,
    pub b1: f64,
}

impl GeneralAnglePlan {
    pub fn direction(&self, player: Player, state: PlayerState) -> f64 {
        match (player, state) {
            (Player::One, PlayerState::Zero) => self.a0,
            (Player::One, PlayerState::One) => self.a1,
            (Player::Two, PlayerState::Zero) => self.b0,
            (Player::Two, PlayerState::One) => self.b1,
        }
    }

    /// Relative angle `b_j - a_i` for the given state pair.
    pub fn relative_angle(&self, pair: StatePair) -> f64 {
        self.direction(Player::Two, pair.player_two) - self.direction(Player::One, pair.player_one)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }

    pub fn to_move(self) -> Move {
        match self {
            Spin::Up => Move::A,
            Spin::Down => Move::B,
        }
    }
}

/// Singlet joint probability `(1 - s t cos theta) / 4`.
pub fn joint_probability(theta: f64, s: Spin, t: Spin) -> f64 {
    (1.0 - s.sign() * t.sign() * theta.cos()) / 4.0
}

/// Probability that players measuring along `dir_one` and `dir_two`
/// obtain different signs, `(1 + cos(dir_two - dir_one)) / 2`.
pub fn mismatch_probability(dir_one: f64, dir_two: f64) -> f64 {
    // half-angle form keeps full relative precision near zero
    let c = ((dir_two - dir_one) / 2.0).cos();
    c * c
}

pub fn general_quantum_profile(plan: &GeneralAnglePlan) -> MismatchProfile {
    let q = StatePair::ALL.map(|pair| {
        mismatch_probability(
            plan.direction(Player::One, pair.player_one),
            plan.direction(Player::Two, pair.player_two),
        )
    });
    MismatchProfile { q00: q[0], q01: q[1], q10: q[2], q11: q[3] }
}

/// `q00 = (1 - cos 3 delta) / 2`, all others `(1 - cos delta) / 2`.
pub fn quantum_profile(delta: f64) -> Result<MismatchProfile> {
    Ok(general_quantum_profile(&AnglePlan::new(delta)?.to_general()))
}

#[derive(Clone, Copy, Debug)]
enum SingletState {
    Fresh,
    Half { player: Player, direction: f64, outcome: Spin },
    Spent,
}

/// One shared singlet. The first measurement yields a fair coin; the
/// partner half then collapses and the second measurement is drawn from
/// the conditional `P(t | s) = (1 - s t cos theta) / 2`. Each half can be
/// measured once.
pub struct Singlet {
    seed: u64,
    round: u64,
    state: Cell<SingletState>,
}

impl Singlet {
    pub fn new(seed: u64, round: u64) -> Self {
        Singlet { seed, round, state: Cell::new(SingletState::Fresh) }
    }

    fn uniforms(&self) -> [f64; 2] {
        let mut rng = derived_rng(self.seed, DOMAIN_SINGLET, self.round);
        [rng.gen(), rng.gen()]
    }

    pub fn measure(&self, player: Player, direction: f64) -> Spin {
        match self.state.get() {
            SingletState::Fresh => {
                let [u, _] = self.uniforms();
                let outcome = if u < 0.5 { Spin::Up } else { Spin::Down };
                self.state.set(SingletState::Half { player, direction, outcome });
                outcome
            }
            SingletState::Half { player: first, direction: a, outcome: s } if first != player => {
                let [_, u] = self.uniforms();
                let half = (direction - a) / 2.0;
                // P(t = Up | s) = (1 - s cos theta) / 2
                let p_up = match s {
                    Spin::Up => half.sin().powi(2),
                    Spin::Down => half.cos().powi(2),
                };
                self.state.set(SingletState::Spent);
                if u < p_up {
                    Spin::Up
                } else {
                    Spin::Down
                }
            }
            _ => panic!("{player:?}'s half of the singlet for round {} was already measured", self.round),
        }
    }
}

/// Measures the round's singlet along the plan direction for its state.
#[derive(Clone, Copy, Debug)]
pub struct QuantumPlayer {
    pub player: Player,
    pub plan: GeneralAnglePlan,
}

impl PlayerStrategy for QuantumPlayer {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move {
        let direction = self.plan.direction(self.player, state);
        round.singlet.measure(self.player, direction).to_move()
    }
}

pub fn quantum_player_strategy(plan: &AnglePlan) -> (QuantumPlayer, QuantumPlayer) {
    general_player_strategy(plan.to_general())
}

pub fn general_player_strategy(plan: GeneralAnglePlan) -> (QuantumPlayer, QuantumPlayer) {
    (
        QuantumPlayer { player: Player::One, plan },
        QuantumPlayer { player: Player::Two, plan },
    )
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointOutcomeCounts {
    pub up_up: u64,
    pub up_down: u64,
    pub down_up: u64,
    pub down_down: u64,
}

impl JointOutcomeCounts {
    pub fn total(&self) -> u64 {
        self.up_up + self.up_down + self.down_up + self.down_down
    }

    pub fn record(&mut self, s: Spin, t: Spin) {
        match (s, t) {
            (Spin::Up, Spin::Up) => self.up_up += 1,
            (Spin::Up, Spin::Down) => self.up_down += 1,
            (Spin::Down, Spin::Up) => self.down_up += 1,
            (Spin::Down, Spin::Down) => self.down_down += 1,
        }
    }

    /// Fraction of draws with `s != t`, i.e. different moves.
    pub fn mismatch_fraction(&self) -> f64 {
        (self.up_down + self.down_up) as f64 / self.total() as f64
    }

    fn merge(self, other: Self) -> Self {
        JointOutcomeCounts {
            up_up: self.up_up + other.up_up,
            up_down: self.up_down + other.up_down,
            down_up: self.down_up + other.down_up,
            down_down: self.down_down + other.down_down,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletSampler {
    pub seed: u64,
}

const SAMPLER_CHUNK: u64 = 1 << 16;

/// Draws `m` joint outcomes straight from the closed-form singlet
/// distribution. Chunks of fixed size get their own stream, so the result
/// does not depend on the thread count.
pub fn sample_joint_outcomes(
    dir_one: f64,
    dir_two: f64,
    m: u64,
    sampler: &SingletSampler,
) -> Result<JointOutcomeCounts> {
    if m == 0 {
        return Err(CoordError::invalid("sample count must be at least 1"));
    }
    let half = (dir_two - dir_one) / 2.0;
    let p_same = half.sin().powi(2) / 2.0;
    let p_diff = half.cos().powi(2) / 2.0;
    let cut = [p_same, p_same + p_diff, p_same + 2.0 * p_diff];

    let chunks = m.div_ceil(SAMPLER_CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = derived_rng(sampler.seed, DOMAIN_SAMPLER, c);
            let len = SAMPLER_CHUNK.min(m - c * SAMPLER_CHUNK);
            let mut counts = JointOutcomeCounts::default();
            for _ in 0..len {
                let u: f64 = rng.gen();
                if u < cut[0] {
                    counts.up_up += 1;
                } else if u < cut[1] {
                    counts.up_down += 1;
                } else if u < cut[2] {
                    counts.down_up += 1;
                } else {
                    counts.down_down += 1;
                }
            }
            counts
        })
        .reduce(JointOutcomeCounts::default, JointOutcomeCounts::merge);
    Ok(counts)
}
