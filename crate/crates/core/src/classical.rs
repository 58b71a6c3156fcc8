//! Classical strategy built from four shared bit sequences.
//!
//! `X0` is a fair-coin sequence of length `N`. `X1`, `X2` and `X3` are
//! each obtained from their predecessor by flipping `F = round(q N)` bits,
//! with the three flip sets pairwise disjoint, which makes
//! `d(X_a, X_b) = F |a - b|`. Player one plays `X0` in state 0 and `X2`
//! in state 1; player two plays `X3` in state 0 and `X1` in state 1. The
//! moves then differ with frequency `3F/N` in state (0,0) and `F/N` in
//! every other state pair.
//!
//! In the channel variant each sequence instead passes its predecessor
//! through a binary symmetric channel with crossover probability `q`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CoordError, Result};
use crate::game::{MismatchProfile, Move, Player, PlayerState, PlayerStrategy, RoundContext};
use crate::rng::{derived_rng, DOMAIN_SEQUENCES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSequence(Vec<bool>);

impl BitSequence {
    pub fn new(bits: Vec<bool>) -> Self {
        BitSequence(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    fn flip(&mut self, i: usize) {
        self.0[i] = !self.0[i];
    }
}

impl fmt::Display for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for BitSequence {
    type Err = CoordError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(CoordError::Parse(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitSequence)
    }
}

/// Number of positions at which `a` and `b` differ.
pub fn hamming_distance(a: &BitSequence, b: &BitSequence) -> Result<usize> {
    if a.len() != b.len() {
        return Err(CoordError::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// The four sequences `X0..X3`, all of the same length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSequenceSet {
    sequences: [BitSequence; 4],
}

impl BitSequenceSet {
    pub fn new(sequences: [BitSequence; 4]) -> Result<Self> {
        let len = sequences[0].len();
        if len == 0 {
            return Err(CoordError::invalid("sequences must be non-empty"));
        }
        if let Some(bad) = sequences.iter().find(|s| s.len() != len) {
            return Err(CoordError::LengthMismatch { left: len, right: bad.len() });
        }
        Ok(BitSequenceSet { sequences })
    }

    pub fn len(&self) -> usize {
        self.sequences[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `X_k` for `k` in `0..4`.
    pub fn x(&self, k: usize) -> &BitSequence {
        &self.sequences[k]
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        hamming_distance(&self.sequences[a], &self.sequences[b]).expect("equal lengths by construction")
    }

    /// Which sequence a player transmits in a given state.
    pub fn sequence_index(player: Player, state: PlayerState) -> usize {
        match (player, state) {
            (Player::One, PlayerState::Zero) => 0,
            (Player::One, PlayerState::One) => 2,
            (Player::Two, PlayerState::Zero) => 3,
            (Player::Two, PlayerState::One) => 1,
        }
    }

    /// Four lines, line `k` holding `X_k` as `0`/`1` characters.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(4 * (self.len() + 1));
        for s in &self.sequences {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() != 4 {
            return Err(CoordError::Parse(format!("expected 4 lines, found {}", lines.len())));
        }
        let seqs = lines
            .iter()
            .map(|l| l.parse::<BitSequence>())
            .collect::<Result<Vec<_>>>()?;
        let seqs: [BitSequence; 4] = seqs.try_into().expect("four lines");
        Self::new(seqs)
    }

    pub fn write_to(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read_from(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelMode {
    DisjointFlips,
    BscChain,
}

impl FromStr for ChannelMode {
    type Err = CoordError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "disjoint-flips" => Ok(ChannelMode::DisjointFlips),
            "bsc-chain" => Ok(ChannelMode::BscChain),
            other => Err(CoordError::invalid(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for ChannelMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelMode::DisjointFlips => "disjoint-flips",
            ChannelMode::BscChain => "bsc-chain",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalConfig {
    pub len: usize,
    pub flip_fraction: f64,
    pub mode: ChannelMode,
    pub seed: u64,
}

impl ClassicalConfig {
    pub fn new(len: usize, flip_fraction: f64, mode: ChannelMode, seed: u64) -> Self {
        ClassicalConfig { len, flip_fraction, mode, seed }
    }

    /// `F = round(q N)`.
    pub fn flip_count(&self) -> usize {
        (self.flip_fraction * self.len as f64).round() as usize
    }

    /// `F / N`, the value the disjoint construction actually realizes.
    pub fn effective_flip_fraction(&self) -> f64 {
        match self.mode {
            ChannelMode::DisjointFlips => self.flip_count() as f64 / self.len as f64,
            ChannelMode::BscChain => self.flip_fraction,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.len == 0 {
            return Err(CoordError::invalid("sequence length N must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.flip_fraction) {
            return Err(CoordError::invalid(format!(
                "flip fraction q must lie in [0, 1], got {}",
                self.flip_fraction
            )));
        }
        if self.mode == ChannelMode::DisjointFlips && 3 * self.flip_count() > self.len {
            return Err(CoordError::InfeasibleFlipCount { flips: self.flip_count(), len: self.len });
        }
        Ok(())
    }
}

pub fn generate_sequences(config: &ClassicalConfig) -> Result<BitSequenceSet> {
    config.validate()?;
    let mut rng = derived_rng(config.seed, DOMAIN_SEQUENCES, 0);
    let x0 = BitSequence((0..config.len).map(|_| rng.gen::<bool>()).collect());
    extend_sequences(x0, config, &mut rng)
}

/// Like [`generate_sequences`] but starting from a caller-supplied `X0`;
/// `config.len` is ignored in favour of `x0.len()`.
pub fn generate_sequences_from(x0: BitSequence, config: &ClassicalConfig) -> Result<BitSequenceSet> {
    let config = ClassicalConfig { len: x0.len(), ..*config };
    config.validate()?;
    let mut rng = derived_rng(config.seed, DOMAIN_SEQUENCES, 1);
    extend_sequences(x0, &config, &mut rng)
}

fn extend_sequences(x0: BitSequence, config: &ClassicalConfig, rng: &mut impl Rng) -> Result<BitSequenceSet> {
    let n = config.len;
    let mut seqs = [x0.clone(), x0.clone(), x0.clone(), x0];
    match config.mode {
        ChannelMode::DisjointFlips => {
            let f = config.flip_count();
            // 3F distinct positions uniformly at random, split into the
            // three flip sets in draw order
            let positions = index::sample(rng, n, 3 * f).into_vec();
            for (step, set) in positions.chunks(f.max(1)).enumerate().take(3) {
                for later in &mut seqs[step + 1..] {
                    for &i in set {
                        later.flip(i);
                    }
                }
            }
        }
        ChannelMode::BscChain => {
            let q = config.flip_fraction;
            for k in 1..4 {
                let prev = seqs[k - 1].clone();
                seqs[k] = BitSequence(prev.0.iter().map(|&b| b ^ rng.gen_bool(q)).collect());
            }
        }
    }
    BitSequenceSet::new(seqs)
}

/// Plays bit `round_index mod N` of its state's sequence.
#[derive(Clone, Debug)]
pub struct ClassicalPlayer {
    pub player: Player,
    sequences: Arc<BitSequenceSet>,
}

impl PlayerStrategy for ClassicalPlayer {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move {
        let seq = self.sequences.x(BitSequenceSet::sequence_index(self.player, state));
        let pos = (round.round_index % self.sequences.len() as u64) as usize;
        Move::from_bit(seq.get(pos))
    }
}

pub fn classical_strategy(player: Player, sequences: Arc<BitSequenceSet>) -> ClassicalPlayer {
    ClassicalPlayer { player, sequences }
}

pub fn classical_strategy_pair(sequences: BitSequenceSet) -> (ClassicalPlayer, ClassicalPlayer) {
    let shared = Arc::new(sequences);
    (
        classical_strategy(Player::One, Arc::clone(&shared)),
        classical_strategy(Player::Two, shared),
    )
}

/// Disjoint flips: `(3q, q, q, q)`. Channel chain: `q00` is the chance of
/// an odd number of crossovers in three uses, `3q - 6q^2 + 4q^3`.
pub fn analytic_classical_profile(q: f64, mode: ChannelMode) -> Result<MismatchProfile> {
    let q00 = match mode {
        ChannelMode::DisjointFlips => 3.0 * q,
        ChannelMode::BscChain => 3.0 * q - 6.0 * q * q + 4.0 * q * q * q,
    };
    MismatchProfile::new(q00, q, q, q)
}
