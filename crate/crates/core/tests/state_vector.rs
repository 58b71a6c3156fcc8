//! Cross-check of the closed-form singlet statistics against an explicit
//! two-qubit state-vector calculation.

use std::f64::consts::PI;

use entangle_coord::game::StatePair;
use entangle_coord::quantum::{general_quantum_profile, joint_probability, GeneralAnglePlan, Spin};
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Mat2 = [[C; 2]; 2];

/// Projector onto spin `s` along angle `phi` in the XY plane:
/// `(I + s (cos phi X + sin phi Y)) / 2`.
fn projector(phi: f64, s: Spin) -> Mat2 {
    let sign = s.sign();
    let off = C::new(phi.cos(), -phi.sin()) * sign * 0.5;
    [[C::new(0.5, 0.0), off], [off.conj(), C::new(0.5, 0.0)]]
}

fn kron(a: &Mat2, b: &Mat2) -> [[C; 4]; 4] {
    let mut out = [[C::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// `<psi| P_s(a) (x) P_t(b) |psi>` for `psi = (|01> - |10>) / sqrt 2`.
fn state_vector_probability(a: f64, b: f64, s: Spin, t: Spin) -> f64 {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let psi = [C::new(0.0, 0.0), C::new(r, 0.0), C::new(-r, 0.0), C::new(0.0, 0.0)];
    let op = kron(&projector(a, s), &projector(b, t));
    let mut total = C::new(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            total += psi[i].conj() * op[i][j] * psi[j];
        }
    }
    assert!(total.im.abs() < 1e-14);
    total.re
}

const SPINS: [Spin; 2] = [Spin::Up, Spin::Down];

#[test]
fn closed_form_matches_state_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..2000 {
        let a = rng.gen_range(-PI..PI);
        let b = rng.gen_range(-PI..PI);
        for s in SPINS {
            for t in SPINS {
                let sv = state_vector_probability(a, b, s, t);
                assert!((sv - joint_probability(b - a, s, t)).abs() < 1e-12, "{a} {b} {s:?} {t:?}");
            }
        }
    }
}

#[test]
fn profile_matches_state_vector_mismatch() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let plan = GeneralAnglePlan {
            a0: rng.gen_range(0.0..2.0 * PI),
            a1: rng.gen_range(0.0..2.0 * PI),
            b0: rng.gen_range(0.0..2.0 * PI),
            b1: rng.gen_range(0.0..2.0 * PI),
        };
        let profile = general_quantum_profile(&plan);
        for pair in StatePair::ALL {
            let a = plan.direction(entangle_coord::Player::One, pair.player_one);
            let b = plan.direction(entangle_coord::Player::Two, pair.player_two);
            let mismatch = state_vector_probability(a, b, Spin::Up, Spin::Down)
                + state_vector_probability(a, b, Spin::Down, Spin::Up);
            assert!((mismatch - profile.get(pair)).abs() < 1e-12);
        }
    }
}

#[test]
fn state_vector_marginals_are_fair() {
    for k in 0..64 {
        let a = 0.1 * k as f64;
        for b in [0.0, 0.7, 2.0, PI + 0.3] {
            for s in SPINS {
                let m: f64 = SPINS.iter().map(|&t| state_vector_probability(a, b, s, t)).sum();
                assert!((m - 0.5).abs() < 1e-14);
            }
        }
    }
}
