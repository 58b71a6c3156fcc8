//! Game primitives: player states, moves, mismatch profiles, the payoff
//! functional and the arbiter that runs matches.
//!
//! The payoff of a strategy pair is
//!
//! ```text
//! P = q00 / max(q01, q10, q11)
//! ```
//!
//! where `q_ij` is the probability that the two players make different
//! moves when player one is in state `i` and player two in state `j`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CoordError, Result};
use crate::quantum::Singlet;

/// z-score of the two-sided 95% normal interval.
pub const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum PlayerState {
    Zero,
    One,
}

impl PlayerState {
    pub const ALL: [PlayerState; 2] = [PlayerState::Zero, PlayerState::One];

    pub fn index(self) -> usize {
        match self {
            PlayerState::Zero => 0,
            PlayerState::One => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(PlayerState::Zero),
            1 => Some(PlayerState::One),
            _ => None,
        }
    }
}

impl From<PlayerState> for u8 {
    fn from(s: PlayerState) -> u8 {
        s.index() as u8
    }
}

impl TryFrom<u8> for PlayerState {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        PlayerState::from_index(v as usize).ok_or_else(|| format!("invalid player state {v}"))
    }
}

impl fmt::Display for PlayerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    A,
    B,
}

impl Move {
    /// Common bit convention for both players: `0 -> A`, `1 -> B`.
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Move::B
        } else {
            Move::A
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::A => "A",
            Move::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatePair {
    pub player_one: PlayerState,
    pub player_two: PlayerState,
}

impl StatePair {
    /// The four pairs in `q00, q01, q10, q11` order.
    pub const ALL: [StatePair; 4] = [
        StatePair::new(PlayerState::Zero, PlayerState::Zero),
        StatePair::new(PlayerState::Zero, PlayerState::One),
        StatePair::new(PlayerState::One, PlayerState::Zero),
        StatePair::new(PlayerState::One, PlayerState::One),
    ];

    pub const fn new(player_one: PlayerState, player_two: PlayerState) -> Self {
        StatePair { player_one, player_two }
    }

    /// Position in [`StatePair::ALL`], i.e. `2 * i + j`.
    pub fn index(self) -> usize {
        2 * self.player_one.index() + self.player_two.index()
    }

    pub fn state_of(self, player: Player) -> PlayerState {
        match player {
            Player::One => self.player_one,
            Player::Two => self.player_two,
        }
    }
}

impl fmt::Display for StatePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.player_one, self.player_two)
    }
}

/// Conditional mismatch probabilities, one per state pair. The entries are
/// probabilities for four distinct conditions and need not sum to anything.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MismatchProfile {
    pub q00: f64,
    pub q01: f64,
    pub q10: f64,
    pub q11: f64,
}

impl MismatchProfile {
    pub fn new(q00: f64, q01: f64, q10: f64, q11: f64) -> Result<Self> {
        let profile = MismatchProfile { q00, q01, q10, q11 };
        profile.validate()?;
        Ok(profile)
    }

    pub fn from_array(q: [f64; 4]) -> Result<Self> {
        Self::new(q[0], q[1], q[2], q[3])
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in ["q00", "q01", "q10", "q11"].into_iter().zip(self.to_array()) {
            if !(0.0..=1.0).contains(&value) {
                return Err(CoordError::InvalidProbability { name, value });
            }
        }
        Ok(())
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.q00, self.q01, self.q10, self.q11]
    }

    pub fn get(&self, pair: StatePair) -> f64 {
        self.to_array()[pair.index()]
    }

    /// `max(q01, q10, q11)`, the payoff denominator.
    pub fn denominator(&self) -> f64 {
        self.q01.max(self.q10).max(self.q11)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(c * self.q00, c * self.q01, c * self.q10, c * self.q11)
    }
}

/// `q00 / max(q01, q10, q11)`.
pub fn payoff(profile: &MismatchProfile) -> Result<f64> {
    profile.validate()?;
    let den = profile.denominator();
    if den == 0.0 {
        return Err(CoordError::DegenerateProfile);
    }
    Ok(profile.q00 / den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round_index: u64,
    pub states: StatePair,
    pub move_one: Move,
    pub move_two: Move,
}

impl RoundRecord {
    pub fn mismatch(&self) -> bool {
        self.move_one != self.move_two
    }
}

/// Per-state-pair mismatch and round tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchCounts {
    pub mismatches: [u64; 4],
    pub rounds: [u64; 4],
}

impl MismatchCounts {
    pub fn from_records(records: &[RoundRecord]) -> Self {
        let mut counts = MismatchCounts::default();
        for r in records {
            counts.add(r.states, r.mismatch());
        }
        counts
    }

    pub fn add(&mut self, pair: StatePair, mismatch: bool) {
        let k = pair.index();
        self.rounds[k] += 1;
        self.mismatches[k] += u64::from(mismatch);
    }

    fn check_support(&self) -> Result<()> {
        match StatePair::ALL.iter().find(|p| self.rounds[p.index()] == 0) {
            Some(&p) => Err(CoordError::MissingStatePair(p)),
            None => Ok(()),
        }
    }

    /// Plain frequency estimates.
    pub fn profile(&self) -> Result<MismatchProfile> {
        self.check_support()?;
        let q: [f64; 4] =
            std::array::from_fn(|k| self.mismatches[k] as f64 / self.rounds[k] as f64);
        MismatchProfile::from_array(q)
    }

    /// Empirical payoff evaluated on the integer tallies, so exact
    /// rational cases such as 3000/10000 over 1000/10000 give exactly 3.
    pub fn payoff(&self) -> Result<f64> {
        let profile = self.profile()?;
        let den_index = (1..4)
            .max_by(|&a, &b| profile.to_array()[a].total_cmp(&profile.to_array()[b]))
            .expect("non-empty range");
        if self.mismatches[den_index] == 0 {
            return Err(CoordError::DegenerateProfile);
        }
        let num = self.mismatches[0] as f64 * self.rounds[den_index] as f64;
        let den = self.rounds[0] as f64 * self.mismatches[den_index] as f64;
        Ok(num / den)
    }

    /// Binomial standard error of each `q_ij` estimate.
    pub fn standard_errors(&self) -> Result<[f64; 4]> {
        let q = self.profile()?.to_array();
        Ok(std::array::from_fn(|k| {
            (q[k] * (1.0 - q[k]) / self.rounds[k] as f64).sqrt()
        }))
    }

    /// Delta-method standard error of the payoff ratio, treating the
    /// numerator and the arg-max denominator entry as independent.
    pub fn payoff_standard_error(&self) -> Result<f64> {
        let profile = self.profile()?;
        let q = profile.to_array();
        let se = self.standard_errors()?;
        let den_index = (1..4)
            .max_by(|&a, &b| q[a].total_cmp(&q[b]))
            .expect("non-empty range");
        let den = q[den_index];
        if den == 0.0 {
            return Err(CoordError::DegenerateProfile);
        }
        let d_num = se[0] / den;
        let d_den = q[0] * se[den_index] / (den * den);
        Ok((d_num * d_num + d_den * d_den).sqrt())
    }
}

/// Fraction of mismatching rounds for every state pair.
pub fn empirical_profile(records: &[RoundRecord]) -> Result<MismatchProfile> {
    MismatchCounts::from_records(records).profile()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PayoffMode {
    Analytic,
    Empirical,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PayoffReport {
    pub payoff: f64,
    pub mode: PayoffMode,
    pub profile: MismatchProfile,
    /// Smallest per-pair sample count; 0 for analytic reports.
    pub samples_per_state_pair: u64,
    /// 95% normal-approximation half-width; 0 for analytic reports.
    pub confidence_halfwidth: f64,
}

impl PayoffReport {
    pub fn analytic(profile: MismatchProfile) -> Result<Self> {
        Ok(PayoffReport {
            payoff: payoff(&profile)?,
            mode: PayoffMode::Analytic,
            profile,
            samples_per_state_pair: 0,
            confidence_halfwidth: 0.0,
        })
    }

    pub fn empirical(counts: &MismatchCounts) -> Result<Self> {
        Ok(PayoffReport {
            payoff: counts.payoff()?,
            mode: PayoffMode::Empirical,
            profile: counts.profile()?,
            samples_per_state_pair: counts.rounds.iter().copied().min().unwrap_or(0),
            confidence_halfwidth: Z_95 * counts.payoff_standard_error()?,
        })
    }
}

/// Per-round view handed to each player: the round number and the shared
/// physical resource for that round.
pub struct RoundContext {
    pub round_index: u64,
    pub singlet: Singlet,
}

impl RoundContext {
    pub fn new(seed: u64, round_index: u64) -> Self {
        RoundContext {
            round_index,
            singlet: Singlet::new(seed, round_index),
        }
    }
}

/// A player's rule for choosing a move. It sees only its own state and
/// the shared round context, never the other player's state.
pub trait PlayerStrategy: Sync {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move;
}

impl<T: PlayerStrategy + ?Sized> PlayerStrategy for &T {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move {
        (**self).respond(state, round)
    }
}

/// Always plays the same move.
#[derive(Clone, Copy, Debug)]
pub struct ConstantStrategy(pub Move);

impl PlayerStrategy for ConstantStrategy {
    fn respond(&self, _state: PlayerState, _round: &RoundContext) -> Move {
        self.0
    }
}

/// Plays `table[state]` regardless of the round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableStrategy(pub [Move; 2]);

impl PlayerStrategy for TableStrategy {
    fn respond(&self, state: PlayerState, _round: &RoundContext) -> Move {
        self.0[state.index()]
    }
}

/// Runs one round per schedule entry. Player one always answers before
/// player two within a round; round `k` gets shared randomness derived
/// from `(seed, k)` alone, so the parallel evaluation below is
/// bit-identical to a sequential loop.
pub fn run_match<S1, S2>(
    strategy_one: &S1,
    strategy_two: &S2,
    schedule: &[StatePair],
    seed: u64,
) -> Vec<RoundRecord>
where
    S1: PlayerStrategy + ?Sized,
    S2: PlayerStrategy + ?Sized,
{
    schedule
        .par_iter()
        .enumerate()
        .map(|(k, &states)| play_round(strategy_one, strategy_two, states, k as u64, seed))
        .collect()
}

/// Sequential reference for [`run_match`].
pub fn run_match_sequential<S1, S2>(
    strategy_one: &S1,
    strategy_two: &S2,
    schedule: &[StatePair],
    seed: u64,
) -> Vec<RoundRecord>
where
    S1: PlayerStrategy + ?Sized,
    S2: PlayerStrategy + ?Sized,
{
    schedule
        .iter()
        .enumerate()
        .map(|(k, &states)| play_round(strategy_one, strategy_two, states, k as u64, seed))
        .collect()
}

fn play_round<S1, S2>(
    one: &S1,
    two: &S2,
    states: StatePair,
    round_index: u64,
    seed: u64,
) -> RoundRecord
where
    S1: PlayerStrategy + ?Sized,
    S2: PlayerStrategy + ?Sized,
{
    let ctx = RoundContext::new(seed, round_index);
    let move_one = one.respond(states.player_one, &ctx);
    let move_two = two.respond(states.player_two, &ctx);
    RoundRecord {
        round_index,
        states,
        move_one,
        move_two,
    }
}

/// Blocked schedule: `rounds_per_state_pair` rounds of (0,0), then (0,1),
/// (1,0) and (1,1). Block `k` starts at round `k * rounds_per_state_pair`.
pub fn uniform_schedule(rounds_per_state_pair: usize) -> Result<Vec<StatePair>> {
    if rounds_per_state_pair == 0 {
        return Err(CoordError::invalid("rounds_per_state_pair must be at least 1"));
    }
    Ok(StatePair::ALL
        .iter()
        .flat_map(|&p| std::iter::repeat_n(p, rounds_per_state_pair))
        .collect())
}
