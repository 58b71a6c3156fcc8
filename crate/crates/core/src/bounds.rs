//! Bound inequalities separating the classical and entangled regimes,
//! local-hidden-variable enumeration, payoff sweeps and angle search.
//!
//! Classical: `q00 <= q01 + q10 + q11`, hence payoff at most 3.
//! Entangled: `q00 <= (sqrt q01 + sqrt q10 + sqrt q11)^2`, hence at most 9.

use std::f64::consts::PI;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::BitSequenceSet;
use crate::error::{CoordError, Result};
use crate::game::{payoff, MismatchProfile, Move, Player, PlayerState, StatePair};
use crate::quantum::{general_quantum_profile, quantum_profile, GeneralAnglePlan};
use crate::rng::{derived_rng, DOMAIN_SEARCH};

pub const BOUND_TOLERANCE: f64 = 1e-12;

/// Floor applied to the payoff denominator during angle search.
pub const DENOMINATOR_FLOOR: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub holds: bool,
    /// Right-hand side minus left-hand side.
    pub slack: f64,
}

impl BoundVerdict {
    fn from_slack(slack: f64) -> Self {
        BoundVerdict { holds: slack >= -BOUND_TOLERANCE, slack }
    }
}

pub fn classical_bound(profile: &MismatchProfile) -> BoundVerdict {
    BoundVerdict::from_slack(profile.q01 + profile.q10 + profile.q11 - profile.q00)
}

pub fn quantum_bound(profile: &MismatchProfile) -> BoundVerdict {
    let root_sum = profile.q01.sqrt() + profile.q10.sqrt() + profile.q11.sqrt();
    BoundVerdict::from_slack(root_sum * root_sum - profile.q00)
}

/// A pair of state-to-move tables, one per player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeterministicStrategyPair {
    pub one: [Move; 2],
    pub two: [Move; 2],
}

impl DeterministicStrategyPair {
    /// All 16 pairs. Bit `3 - p` of the index selects the move for table
    /// entry `p` in the order one[0], one[1], two[0], two[1].
    pub fn all() -> [DeterministicStrategyPair; 16] {
        std::array::from_fn(|k| {
            let bit = |p: usize| Move::from_bit(k >> (3 - p) & 1 == 1);
            DeterministicStrategyPair { one: [bit(0), bit(1)], two: [bit(2), bit(3)] }
        })
    }

    pub fn index(&self) -> usize {
        let b = |m: Move| usize::from(m == Move::B);
        b(self.one[0]) << 3 | b(self.one[1]) << 2 | b(self.two[0]) << 1 | b(self.two[1])
    }

    pub fn move_for(&self, player: Player, state: PlayerState) -> Move {
        match player {
            Player::One => self.one[state.index()],
            Player::Two => self.two[state.index()],
        }
    }

    /// Indicators `[m1(i) != m2(j)]` in q00, q01, q10, q11 order.
    pub fn indicators(&self) -> [u8; 4] {
        StatePair::ALL.map(|p| u8::from(self.one[p.player_one.index()] != self.two[p.player_two.index()]))
    }

    pub fn profile(&self) -> MismatchProfile {
        let d = self.indicators();
        MismatchProfile {
            q00: d[0].into(),
            q01: d[1].into(),
            q10: d[2].into(),
            q11: d[3].into(),
        }
    }
}

pub fn enumerate_deterministic_pairs() -> Vec<(DeterministicStrategyPair, MismatchProfile)> {
    DeterministicStrategyPair::all().into_iter().map(|p| (p, p.profile())).collect()
}

/// Exhaustive check of `d00 <= d01 + d10 + d11` on integers.
pub fn vertices_satisfy_classical_bound() -> bool {
    DeterministicStrategyPair::all().iter().all(|p| {
        let d = p.indicators();
        d[0] <= d[1] + d[2] + d[3]
    })
}

/// Shared classical randomness as weights over the 16 deterministic pairs,
/// indexed by [`DeterministicStrategyPair::index`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LhvMixture {
    weights: [f64; 16],
}

impl LhvMixture {
    pub fn new(weights: [f64; 16]) -> Result<Self> {
        if weights.iter().any(|&w| w.is_nan() || w < 0.0) {
            return Err(CoordError::invalid("mixture weights must be nonnegative"));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(CoordError::invalid(format!("mixture weights sum to {total}, not 1")));
        }
        Ok(LhvMixture { weights })
    }

    pub fn point_mass(pair: DeterministicStrategyPair) -> Self {
        let mut weights = [0.0; 16];
        weights[pair.index()] = 1.0;
        LhvMixture { weights }
    }

    pub fn uniform() -> Self {
        LhvMixture { weights: [1.0 / 16.0; 16] }
    }

    pub fn weights(&self) -> &[f64; 16] {
        &self.weights
    }

    /// Empirical distribution of the per-position tables
    /// `(X0[k], X2[k]) / (X3[k], X1[k])` of a classical sequence set.
    pub fn from_sequences(sequences: &BitSequenceSet) -> Self {
        let n = sequences.len();
        let mut counts = [0u64; 16];
        for k in 0..n {
            let table = |player| {
                PlayerState::ALL.map(|s| Move::from_bit(sequences.x(BitSequenceSet::sequence_index(player, s)).get(k)))
            };
            let pair = DeterministicStrategyPair { one: table(Player::One), two: table(Player::Two) };
            counts[pair.index()] += 1;
        }
        LhvMixture { weights: counts.map(|c| c as f64 / n as f64) }
    }
}

/// `q_ij = sum_k w_k d_ij(k)`.
pub fn lhv_profile(mixture: &LhvMixture) -> MismatchProfile {
    let mut q = [0.0; 4];
    for (pair, &w) in DeterministicStrategyPair::all().iter().zip(&mixture.weights) {
        for (acc, d) in q.iter_mut().zip(pair.indicators()) {
            *acc += w * f64::from(d);
        }
    }
    MismatchProfile { q00: q[0], q01: q[1], q10: q[2], q11: q[3] }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LhvOptimum {
    pub supremum: f64,
    pub witness: LhvMixture,
    /// Flip fraction `q` of the witness profile `(3q, q, q, q)`.
    pub witness_flip_fraction: f64,
}

/// Weight placed on each single-mismatch vertex by the witness.
const WITNESS_Q: f64 = 0.25;

/// Supremum of the payoff over all classical mixtures.
///
/// Every vertex satisfies the classical bound, and the bound is linear, so
/// every mixture does and the payoff is at most 3. The witness puts weight
/// `q` on the three vertices mismatching at (0,0) plus exactly one other
/// pair and `1 - 3q` on an always-agree vertex, reaching `(3q, q, q, q)`.
pub fn lhv_supremum_payoff() -> Result<LhvOptimum> {
    if !vertices_satisfy_classical_bound() {
        return Err(CoordError::Invariant("a deterministic vertex violates the classical bound".into()));
    }
    // one vertex per pattern; the A/B-swapped twin has the same indicators
    let mut singles: Vec<DeterministicStrategyPair> = Vec::new();
    for p in DeterministicStrategyPair::all() {
        let d = p.indicators();
        if d[0] == 1 && d[1] + d[2] + d[3] == 1 && singles.iter().all(|s| s.indicators() != d) {
            singles.push(p);
        }
    }
    let agree = DeterministicStrategyPair { one: [Move::A; 2], two: [Move::A; 2] };
    let mut weights = [0.0; 16];
    for p in &singles {
        weights[p.index()] += WITNESS_Q;
    }
    weights[agree.index()] += 1.0 - WITNESS_Q * singles.len() as f64;
    let witness = LhvMixture::new(weights)?;
    let attained = payoff(&lhv_profile(&witness))?;
    if (attained - 3.0).abs() > 1e-12 {
        return Err(CoordError::Invariant(format!("witness payoff {attained} is not 3")));
    }
    Ok(LhvOptimum { supremum: 3.0, witness, witness_flip_fraction: WITNESS_Q })
}

fn mixture_objective(weights: &[f64; 16]) -> f64 {
    let total: f64 = weights.iter().sum();
    let normalized = weights.map(|w| w / total);
    let profile = lhv_profile(&LhvMixture { weights: normalized });
    let den = profile.denominator();
    if den <= 0.0 {
        f64::NEG_INFINITY
    } else {
        profile.q00 / den
    }
}

/// Random-restart hill climb over the mixture simplex. Each restart draws
/// a Dirichlet(1) start and repeatedly moves mass between two random
/// vertices, keeping improvements. Returns the best payoff seen.
pub fn lhv_hill_climb(restarts: usize, steps: usize, seed: u64) -> f64 {
    (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = derived_rng(seed, DOMAIN_SEARCH, r as u64);
            let mut w: [f64; 16] = std::array::from_fn(|_| -(1.0 - rng.gen::<f64>()).ln());
            let mut best = mixture_objective(&w);
            for step in 0..steps {
                let scale = 0.5 * (1.0 - step as f64 / steps as f64) + 1e-3;
                let from = rng.gen_range(0..16);
                let to = rng.gen_range(0..16);
                // occasionally empty a vertex outright so faces are reachable
                let amount = if rng.gen_bool(0.2) { w[from] } else { w[from] * scale * rng.gen::<f64>() };
                let mut trial = w;
                trial[from] -= amount;
                trial[to] += amount;
                let value = mixture_objective(&trial);
                if value > best {
                    best = value;
                    w = trial;
                }
            }
            best
        })
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub delta: f64,
    pub profile: MismatchProfile,
    pub payoff: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

/// Entangled payoff on `steps` evenly spaced values from `delta_min` to
/// `delta_max` inclusive.
pub fn sweep_quantum_payoff(delta_min: f64, delta_max: f64, steps: usize) -> Result<SweepTable> {
    if !(delta_min > 0.0 && delta_min < delta_max && delta_max.is_finite()) {
        return Err(CoordError::invalid(format!(
            "need 0 < delta_min < delta_max, got {delta_min}, {delta_max}"
        )));
    }
    if steps < 2 {
        return Err(CoordError::invalid("steps must be at least 2"));
    }
    let width = delta_max - delta_min;
    let rows = (0..steps)
        .into_par_iter()
        .map(|k| {
            let delta = if k == steps - 1 {
                delta_max
            } else {
                delta_min + width * k as f64 / (steps - 1) as f64
            };
            let profile = quantum_profile(delta)?;
            Ok(SweepRow { delta, profile, payoff: payoff(&profile)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { rows })
}

/// `q00 / max(floor, q01, q10, q11)`.
pub fn floored_payoff(profile: &MismatchProfile, floor: f64) -> f64 {
    profile.q00 / profile.denominator().max(floor)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleSearchResult {
    pub plan: GeneralAnglePlan,
    pub profile: MismatchProfile,
    /// Objective value with the denominator floor.
    pub floored_payoff: f64,
    /// Payoff recomputed without the floor; `None` when degenerate.
    pub payoff: Option<f64>,
    /// Denominator within `10 * floor` of zero.
    pub near_degenerate: bool,
    pub evaluations: u64,
}

fn plan_from(a1: f64, b0: f64, b1: f64) -> GeneralAnglePlan {
    GeneralAnglePlan { a0: 0.0, a1, b0, b1 }
}

pub fn optimize_general_angles(resolution: usize, refine_iters: usize) -> Result<AngleSearchResult> {
    optimize_general_angles_with_floor(resolution, refine_iters, DENOMINATOR_FLOOR)
}

/// Grid search over `(a1, b0, b1)` on `[0, 2 pi)^3` with `a0 = 0`, then
/// coordinate descent with a step that halves whenever no coordinate move
/// improves. Ties keep the earliest grid point.
pub fn optimize_general_angles_with_floor(
    resolution: usize,
    refine_iters: usize,
    floor: f64,
) -> Result<AngleSearchResult> {
    if resolution < 8 {
        return Err(CoordError::invalid("resolution must be at least 8"));
    }
    if floor.is_nan() || floor <= 0.0 {
        return Err(CoordError::invalid("denominator floor must be positive"));
    }
    let step = 2.0 * PI / resolution as f64;
    let objective = |x: [f64; 3]| floored_payoff(&general_quantum_profile(&plan_from(x[0], x[1], x[2])), floor);

    let r = resolution;
    let (_, mut best_x, mut best) = (0..r * r * r)
        .into_par_iter()
        .map(|k| {
            let x = [(k / (r * r)) as f64 * step, (k / r % r) as f64 * step, (k % r) as f64 * step];
            (k, x, objective(x))
        })
        .reduce(
            || (usize::MAX, [0.0; 3], f64::NEG_INFINITY),
            |a, b| if b.2 > a.2 || (b.2 == a.2 && b.0 < a.0) { b } else { a },
        );
    let mut evaluations = (r * r * r) as u64;

    let mut h = step / 2.0;
    for _ in 0..refine_iters {
        let mut improved = false;
        for axis in 0..3 {
            for dir in [1.0, -1.0] {
                let mut trial = best_x;
                trial[axis] += dir * h;
                let v = objective(trial);
                evaluations += 1;
                if v > best {
                    best = v;
                    best_x = trial;
                    improved = true;
                }
            }
        }
        if !improved {
            h /= 2.0;
        }
    }

    let plan = plan_from(best_x[0], best_x[1], best_x[2]);
    let profile = general_quantum_profile(&plan);
    Ok(AngleSearchResult {
        plan,
        profile,
        floored_payoff: best,
        payoff: payoff(&profile).ok(),
        near_degenerate: profile.denominator() < 10.0 * floor,
        evaluations,
    })
}

/// Best floored payoff over the equally spaced family, scanning `delta` on
/// a log grid from `1e-7` to `pi / 3`.
pub fn best_equally_spaced_payoff(floor: f64, points: usize) -> f64 {
    let (lo, hi) = (1e-7f64.ln(), (PI / 3.0).ln());
    (0..points)
        .map(|k| (lo + (hi - lo) * k as f64 / (points - 1) as f64).exp())
        .map(|d| floored_payoff(&quantum_profile(d).expect("finite delta"), floor))
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{generate_sequences, ChannelMode, ClassicalConfig};
    use crate::game::MismatchProfile as P;

    fn profile(q: [f64; 4]) -> P {
        P::from_array(q).unwrap()
    }

    #[test]
    fn classical_bound_examples() {
        let v = classical_bound(&profile([0.3, 0.1, 0.1, 0.1]));
        assert!(v.holds);
        assert!(v.slack.abs() < 1e-12);
        let v = classical_bound(&profile([0.0223318, 0.0024979, 0.0024979, 0.0024979]));
        assert!(!v.holds);
        assert!((v.slack + 0.0148381).abs() < 1e-7);
        let v = classical_bound(&profile([0.0; 4]));
        assert!(v.holds && v.slack == 0.0);
    }

    #[test]
    fn quantum_bound_examples() {
        let v = quantum_bound(&profile([0.0223318, 0.0024979, 0.0024979, 0.0024979]));
        assert!(v.holds);
        assert!((v.slack - 0.0001493).abs() < 1e-9);
        let v = quantum_bound(&profile([1.0, 0.0, 0.0, 0.0]));
        assert!(!v.holds && v.slack == -1.0);
        let v = quantum_bound(&profile([0.3, 0.1, 0.1, 0.1]));
        assert!(v.holds && (v.slack - 0.6).abs() < 1e-12);
    }

    #[test]
    fn deterministic_pairs() {
        let all = enumerate_deterministic_pairs();
        assert_eq!(all.len(), 16);
        let distinct: std::collections::HashSet<_> = all.iter().map(|(p, _)| *p).collect();
        assert_eq!(distinct.len(), 16);
        for (k, (p, _)) in all.iter().enumerate() {
            assert_eq!(p.index(), k);
        }
        let aa = DeterministicStrategyPair { one: [Move::A; 2], two: [Move::A; 2] };
        assert_eq!(aa.profile().to_array(), [0.0; 4]);
        let ab = DeterministicStrategyPair { one: [Move::A; 2], two: [Move::B; 2] };
        assert_eq!(ab.profile().to_array(), [1.0; 4]);
        assert!(vertices_satisfy_classical_bound());
        for (_, prof) in &all {
            assert!(classical_bound(prof).holds);
        }
    }

    #[test]
    fn lhv_profile_examples() {
        let aa = DeterministicStrategyPair { one: [Move::A; 2], two: [Move::A; 2] };
        assert_eq!(lhv_profile(&LhvMixture::point_mass(aa)).to_array(), [0.0; 4]);
        assert_eq!(lhv_profile(&LhvMixture::uniform()).to_array(), [0.5; 4]);
        assert!(LhvMixture::new([0.1; 16]).is_err());
        let mut w = [0.0; 16];
        w[0] = 1.5;
        w[1] = -0.5;
        assert!(LhvMixture::new(w).is_err());
    }

    #[test]
    fn construction_is_a_mixture() {
        let cfg = ClassicalConfig::new(1000, 0.1, ChannelMode::DisjointFlips, 6);
        let set = generate_sequences(&cfg).unwrap();
        let mix = LhvMixture::from_sequences(&set);
        LhvMixture::new(*mix.weights()).unwrap();
        let p = lhv_profile(&mix);
        for (got, want) in p.to_array().into_iter().zip([0.3, 0.1, 0.1, 0.1]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn lhv_optimum() {
        let opt = lhv_supremum_payoff().unwrap();
        assert_eq!(opt.supremum, 3.0);
        let p = lhv_profile(&opt.witness);
        assert_eq!(payoff(&p).unwrap(), 3.0);
        let q = opt.witness_flip_fraction;
        assert_eq!(p.to_array(), [3.0 * q, q, q, q]);
    }

    #[test]
    fn hill_climb_small() {
        let best = lhv_hill_climb(50, 300, 1);
        assert!(best <= 3.0 + 1e-9);
        assert!(best > 2.0, "{best}");
    }

    #[test]
    fn sweep_examples() {
        let t = sweep_quantum_payoff(0.01, 1.0, 100).unwrap();
        assert_eq!(t.rows.len(), 100);
        assert_eq!(t.rows[0].delta, 0.01);
        assert_eq!(t.rows[99].delta, 1.0);
        assert!((t.rows[0].payoff - 8.999_400_015).abs() < 1e-4);
        assert!(t.rows.windows(2).all(|w| w[1].payoff < w[0].payoff));
        let t = sweep_quantum_payoff(0.5, PI / 3.0, 2).unwrap();
        assert!((t.rows[1].payoff - 4.0).abs() < 1e-12);
        assert!(sweep_quantum_payoff(0.0, 1.0, 10).is_err());
        assert!(sweep_quantum_payoff(0.5, 0.4, 10).is_err());
        assert!(sweep_quantum_payoff(0.1, 0.4, 1).is_err());
    }

    #[test]
    fn sweep_matches_closed_forms() {
        // (1 - cos 3d) / (1 - cos d) = sin^2(3d/2) / sin^2(d/2) = (1 + 2 cos d)^2
        for row in sweep_quantum_payoff(0.01, 2.0, 400).unwrap().rows {
            let d = row.delta;
            let ratio = ((1.5 * d).sin() / (0.5 * d).sin()).powi(2);
            let poly = (1.0 + 2.0 * d.cos()).powi(2);
            assert!((row.payoff - ratio).abs() < 1e-12, "{d}");
            assert!((row.payoff - poly).abs() < 1e-12, "{d}");
        }
    }

    #[test]
    fn separation_witness() {
        for k in 1..=50 {
            let d = 0.5 * k as f64 / 50.0;
            let p = quantum_profile(d).unwrap();
            let c = classical_bound(&p);
            assert!(!c.holds && c.slack <= -0.9 * d * d, "{d}: {c:?}");
            assert!(quantum_bound(&p).holds);
        }
    }

    #[test]
    fn angle_search() {
        let res = optimize_general_angles(16, 200).unwrap();
        assert!(res.floored_payoff <= 9.0 + 1e-6);
        assert!(res.floored_payoff > 8.0, "{res:?}");
        assert!(quantum_bound(&res.profile).slack >= -1e-12);
        assert!(optimize_general_angles(4, 10).is_err());
    }

    #[test]
    fn angle_search_is_deterministic() {
        assert_eq!(optimize_general_angles(12, 50).unwrap(), optimize_general_angles(12, 50).unwrap());
    }

    #[test]
    fn equally_spaced_family_approaches_nine() {
        let values: Vec<f64> = [1e-2, 1e-4, 1e-6, 1e-8].iter().map(|&f| best_equally_spaced_payoff(f, 2000)).collect();
        assert!(values.windows(2).all(|w| w[1] >= w[0]), "{values:?}");
        assert!(values[3] > 9.0 - 1e-3 && values[3] <= 9.0 + 1e-9, "{values:?}");
    }

    #[test]
    fn sine_triangle_inequality_numerically() {
        let mut rng = derived_rng(0, 0, 0);
        for _ in 0..10_000 {
            let [x, y, z]: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
            assert!((x + y + z).sin().abs() <= x.sin().abs() + y.sin().abs() + z.sin().abs() + 1e-12);
        }
    }
}
