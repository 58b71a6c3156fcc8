//! Player isolation and no-signaling with instrumented strategies.

use std::sync::Mutex;

use entangle_coord::classical::{classical_strategy_pair, generate_sequences, ChannelMode, ClassicalConfig};
use entangle_coord::game::{
    run_match, uniform_schedule, Move, PlayerState, PlayerStrategy, RoundContext, RoundRecord, StatePair,
};
use entangle_coord::quantum::{quantum_player_strategy, AnglePlan};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Logs every `(round, own state, move)` the wrapped strategy produces.
struct Instrumented<S> {
    inner: S,
    log: Mutex<Vec<(u64, PlayerState, Move)>>,
}

impl<S> Instrumented<S> {
    fn new(inner: S) -> Self {
        Instrumented { inner, log: Mutex::new(Vec::new()) }
    }

    fn sorted_log(&self) -> Vec<(u64, PlayerState, Move)> {
        let mut log = self.log.lock().unwrap().clone();
        log.sort_by_key(|e| e.0);
        log
    }
}

impl<S: PlayerStrategy> PlayerStrategy for Instrumented<S> {
    fn respond(&self, state: PlayerState, round: &RoundContext) -> Move {
        let m = self.inner.respond(state, round);
        self.log.lock().unwrap().push((round.round_index, state, m));
        m
    }
}

fn random_schedule(len: usize, seed: u64) -> Vec<StatePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| StatePair::ALL[rng.gen_range(0..4)]).collect()
}

fn flip_player_two(schedule: &[StatePair]) -> Vec<StatePair> {
    schedule
        .iter()
        .map(|p| {
            let other = match p.player_two {
                PlayerState::Zero => PlayerState::One,
                PlayerState::One => PlayerState::Zero,
            };
            StatePair::new(p.player_one, other)
        })
        .collect()
}

fn player_one_moves(records: &[RoundRecord]) -> Vec<Move> {
    records.iter().map(|r| r.move_one).collect()
}

#[test]
fn quantum_player_one_ignores_player_two_state() {
    let (one, two) = quantum_player_strategy(&AnglePlan::new(0.1).unwrap());
    let schedule = random_schedule(20_000, 1);
    let a = run_match(&one, &two, &schedule, 42);
    let b = run_match(&one, &two, &flip_player_two(&schedule), 42);
    assert_eq!(player_one_moves(&a), player_one_moves(&b));
    // player two's moves do change: the correlation is real
    assert_ne!(a.iter().map(|r| r.move_two).collect::<Vec<_>>(), b.iter().map(|r| r.move_two).collect::<Vec<_>>());
}

#[test]
fn classical_player_one_ignores_player_two_state() {
    let set = generate_sequences(&ClassicalConfig::new(500, 0.1, ChannelMode::BscChain, 3)).unwrap();
    let (one, two) = classical_strategy_pair(set);
    let schedule = random_schedule(5_000, 2);
    let a = run_match(&one, &two, &schedule, 0);
    let b = run_match(&one, &two, &flip_player_two(&schedule), 0);
    assert_eq!(player_one_moves(&a), player_one_moves(&b));
}

#[test]
fn instrumented_log_sees_only_own_state() {
    let (one, two) = quantum_player_strategy(&AnglePlan::new(0.1).unwrap());
    let (one, two) = (Instrumented::new(one), Instrumented::new(two));
    let schedule = uniform_schedule(1000).unwrap();
    let records = run_match(&one, &two, &schedule, 7);
    let log_one = one.sorted_log();
    let log_two = two.sorted_log();
    assert_eq!(log_one.len(), schedule.len());
    for ((r, l1), l2) in records.iter().zip(&log_one).zip(&log_two) {
        assert_eq!((r.round_index, r.states.player_one, r.move_one), *l1);
        assert_eq!((r.round_index, r.states.player_two, r.move_two), *l2);
    }
}

#[test]
fn instrumented_marginals_are_fair() {
    let n = 250_000;
    let (one, two) = quantum_player_strategy(&AnglePlan::new(0.1).unwrap());
    let (one, two) = (Instrumented::new(one), Instrumented::new(two));
    let schedule = uniform_schedule(n).unwrap();
    run_match(&one, &two, &schedule, 13);
    for (log, own_of, other_of) in [
        (one.sorted_log(), (|p: StatePair| p.player_one) as fn(StatePair) -> PlayerState, (|p: StatePair| p.player_two) as fn(StatePair) -> PlayerState),
        (two.sorted_log(), |p: StatePair| p.player_two, |p: StatePair| p.player_one),
    ] {
        for own in PlayerState::ALL {
            for other in PlayerState::ALL {
                let (mut a, mut total) = (0u64, 0u64);
                for &(k, state, m) in &log {
                    let pair = schedule[k as usize];
                    assert_eq!(state, own_of(pair));
                    if own_of(pair) == own && other_of(pair) == other {
                        total += 1;
                        a += u64::from(m == Move::A);
                    }
                }
                let freq = a as f64 / total as f64;
                assert!((freq - 0.5).abs() < 4.0 * (0.25 / total as f64).sqrt(), "{own} {other}: {freq}");
            }
        }
    }
}
