//! Seed derivation for reproducible, split-friendly random streams.
//!
//! Every consumer of randomness keys a ChaCha8 generator from the
//! `(seed, domain)` pair and selects a stream by an index (round number,
//! chunk number). Work can then be partitioned across threads in any way
//! and still reproduce the sequential output bit for bit.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) const DOMAIN_SINGLET: u64 = 0x5349_4e47_4c45_5431;
pub(crate) const DOMAIN_SAMPLER: u64 = 0x5341_4d50_4c45_5231;
pub(crate) const DOMAIN_SEQUENCES: u64 = 0x5345_5155_454e_4345;
pub(crate) const DOMAIN_SEARCH: u64 = 0x4849_4c4c_434c_4d42;

pub(crate) fn derived_rng(seed: u64, domain: u64, stream: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(stream);
    rng
}
