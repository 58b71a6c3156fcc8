use thiserror::Error;

use crate::game::StatePair;

pub type Result<T, E = CoordError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CoordError {
    /// `max(q01, q10, q11) == 0`, so the payoff ratio is undefined.
    #[error("payoff undefined: q01, q10 and q11 are all zero")]
    DegenerateProfile,

    #[error("no rounds recorded for state pair {0}")]
    MissingStatePair(StatePair),

    #[error("cannot place 3 disjoint flip sets of {flips} bits in a sequence of length {len}")]
    InfeasibleFlipCount { flips: usize, len: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("mismatch probability {name} = {value} is outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("malformed sequence file: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CoordError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CoordError::InvalidParameter(msg.into())
    }
}
