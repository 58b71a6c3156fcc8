//! Experiment runners behind the command-line tool, plus their CSV and
//! JSON renderings.
//!
//! Every run is a [`Run`] record carrying the subcommand name, seed,
//! parameters, results and tool version. JSON output is one object per
//! run. CSV output has a header row; each data row starts with
//! `subcommand,seed,tool_version`, then the parameter columns, then the
//! result columns. Floats are printed with 9 significant digits.

use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::{
    classical_bound, enumerate_deterministic_pairs, lhv_hill_climb, lhv_profile, lhv_supremum_payoff, quantum_bound,
    sweep_quantum_payoff, vertices_satisfy_classical_bound, BoundVerdict,
};
use crate::classical::{
    analytic_classical_profile, classical_strategy_pair, generate_sequences, ChannelMode, ClassicalConfig,
};
use crate::error::{CoordError, Result};
use crate::game::{
    payoff, run_match, uniform_schedule, MismatchCounts, MismatchProfile, PayoffReport, RoundRecord, StatePair,
};
use crate::quantum::{
    quantum_player_strategy, quantum_profile, sample_joint_outcomes, AnglePlan, JointOutcomeCounts, SingletSampler,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const DEFAULT_ROUNDS_PER_PAIR: usize = 100_000;
pub const DEFAULT_DELTA_MIN: f64 = 0.01;
pub const DEFAULT_DELTA_MAX: f64 = 1.0;
pub const DEFAULT_STEPS: usize = 100;
pub const LHV_RESTARTS: usize = 1000;
pub const LHV_STEPS: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = CoordError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CoordError::invalid(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Run<P, R> {
    pub subcommand: String,
    pub seed: u64,
    pub parameters: P,
    pub results: R,
    pub tool_version: String,
}

impl<P, R> Run<P, R> {
    fn new(subcommand: &str, seed: u64, parameters: P, results: R) -> Self {
        Run {
            subcommand: subcommand.to_string(),
            seed,
            parameters,
            results,
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}

/// Fixed CSV column layout for a parameter or result block.
pub trait CsvColumns {
    fn header() -> Vec<&'static str>;
    /// Parameter blocks return exactly one row.
    fn rows(&self) -> Vec<Vec<String>>;
}

/// Rounds to 9 significant digits.
pub fn round_sig9(x: f64) -> f64 {
    if x.is_finite() && x != 0.0 {
        format!("{x:.8e}").parse().expect("formatted float parses")
    } else {
        x
    }
}

fn num(x: f64) -> String {
    round_sig9(x).to_string()
}

fn text(x: impl Display) -> String {
    x.to_string()
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig9(n.as_f64().expect("f64 number"));
            if let Some(r) = serde_json::Number::from_f64(x) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

impl<P, R> Run<P, R>
where
    P: Serialize + CsvColumns,
    R: Serialize + CsvColumns,
{
    pub fn to_json(&self) -> Result<String> {
        let mut value = serde_json::to_value(self).map_err(|e| CoordError::Invariant(e.to_string()))?;
        round_json(&mut value);
        let mut s = serde_json::to_string_pretty(&value).map_err(|e| CoordError::Invariant(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> String {
        let mut header = vec!["subcommand", "seed", "tool_version"];
        header.extend(P::header());
        header.extend(R::header());
        let mut prefix = vec![self.subcommand.clone(), self.seed.to_string(), self.tool_version.clone()];
        prefix.extend(self.parameters.rows().remove(0));
        let mut out = header.join(",");
        out.push('\n');
        for row in self.results.rows() {
            let mut line = prefix.clone();
            line.extend(row);
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => Ok(self.to_csv()),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Writes to `path`, or to stdout when `None`.
pub fn emit(rendered: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, rendered)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(rendered.as_bytes())?;
        }
    }
    Ok(())
}

const PROFILE_COLS: [&str; 4] = ["q00", "q01", "q10", "q11"];

fn profile_cells(p: &MismatchProfile) -> Vec<String> {
    p.to_array().into_iter().map(num).collect()
}

fn verdict_cells(v: &BoundVerdict) -> Vec<String> {
    vec![text(v.holds), num(v.slack)]
}

/// Analytic/empirical evaluation of one strategy: profile, payoff and
/// both bound verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub profile: MismatchProfile,
    /// `None` when the payoff is degenerate.
    pub report: Option<PayoffReport>,
    pub classical_bound: BoundVerdict,
    pub quantum_bound: BoundVerdict,
}

impl Evaluation {
    fn analytic(profile: MismatchProfile) -> Self {
        Evaluation {
            profile,
            report: PayoffReport::analytic(profile).ok(),
            classical_bound: classical_bound(&profile),
            quantum_bound: quantum_bound(&profile),
        }
    }

    fn empirical(counts: &MismatchCounts) -> Result<Self> {
        let profile = counts.profile()?;
        Ok(Evaluation {
            profile,
            report: PayoffReport::empirical(counts).ok(),
            classical_bound: classical_bound(&profile),
            quantum_bound: quantum_bound(&profile),
        })
    }

    fn header(prefix: &'static str) -> Vec<&'static str> {
        match prefix {
            "analytic" => vec![
                "analytic_q00",
                "analytic_q01",
                "analytic_q10",
                "analytic_q11",
                "analytic_payoff",
                "analytic_classical_holds",
                "analytic_classical_slack",
                "analytic_quantum_holds",
                "analytic_quantum_slack",
            ],
            _ => vec![
                "empirical_q00",
                "empirical_q01",
                "empirical_q10",
                "empirical_q11",
                "empirical_payoff",
                "empirical_ci_halfwidth",
                "samples_per_state_pair",
                "empirical_classical_holds",
                "empirical_classical_slack",
                "empirical_quantum_holds",
                "empirical_quantum_slack",
            ],
        }
    }

    fn cells(&self, empirical: bool) -> Vec<String> {
        let mut row = profile_cells(&self.profile);
        row.push(opt_num(self.report.map(|r| r.payoff)));
        if empirical {
            row.push(opt_num(self.report.map(|r| r.confidence_halfwidth)));
            row.push(self.report.map(|r| r.samples_per_state_pair.to_string()).unwrap_or_default());
        }
        row.extend(verdict_cells(&self.classical_bound));
        row.extend(verdict_cells(&self.quantum_bound));
        row
    }
}

// ---------------------------------------------------------------- classical

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalParams {
    pub n: usize,
    pub q: f64,
    pub mode: ChannelMode,
    pub rounds_per_pair: usize,
}

impl CsvColumns for ClassicalParams {
    fn header() -> Vec<&'static str> {
        vec!["n", "q", "mode", "rounds_per_pair"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![text(self.n), num(self.q), text(self.mode), text(self.rounds_per_pair)]]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalResults {
    pub flip_count: usize,
    pub effective_q: f64,
    /// `d(X_a, X_b)` for (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
    pub hamming_distances: [usize; 6],
    pub analytic: Evaluation,
    pub empirical: Evaluation,
}

const PAIRS6: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl CsvColumns for ClassicalResults {
    fn header() -> Vec<&'static str> {
        let mut h = vec!["flip_count", "effective_q", "d01", "d02", "d03", "d12", "d13", "d23"];
        h.extend(Evaluation::header("analytic"));
        h.extend(Evaluation::header("empirical"));
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![text(self.flip_count), num(self.effective_q)];
        row.extend(self.hamming_distances.iter().map(text));
        row.extend(self.analytic.cells(false));
        row.extend(self.empirical.cells(true));
        vec![row]
    }
}

pub type ClassicalRun = Run<ClassicalParams, ClassicalResults>;

/// `rounds_per_pair = None` runs one full cycle over the sequences.
pub fn cmd_classical(
    n: usize,
    q: f64,
    mode: ChannelMode,
    rounds_per_pair: Option<usize>,
    seed: u64,
    sequences_out: Option<&Path>,
) -> Result<ClassicalRun> {
    let config = ClassicalConfig::new(n, q, mode, seed);
    let sequences = generate_sequences(&config)?;
    if let Some(path) = sequences_out {
        sequences.write_to(path)?;
    }
    let hamming_distances = PAIRS6.map(|(a, b)| sequences.distance(a, b));
    let flip_count = config.flip_count();
    if mode == ChannelMode::DisjointFlips {
        for ((a, b), d) in PAIRS6.iter().zip(hamming_distances) {
            if d != flip_count * a.abs_diff(*b) {
                return Err(CoordError::Invariant(format!("d(X{a}, X{b}) = {d}, expected {}", flip_count * (b - a))));
            }
        }
    }
    let effective_q = config.effective_flip_fraction();
    let analytic = Evaluation::analytic(analytic_classical_profile(effective_q, mode)?);

    let rounds_per_pair = rounds_per_pair.unwrap_or(n);
    let (one, two) = classical_strategy_pair(sequences);
    let records = run_match(&one, &two, &uniform_schedule(rounds_per_pair)?, seed);
    let empirical = Evaluation::empirical(&MismatchCounts::from_records(&records))?;

    Ok(Run::new(
        "classical",
        seed,
        ClassicalParams { n, q, mode, rounds_per_pair },
        ClassicalResults { flip_count, effective_q, hamming_distances, analytic, empirical },
    ))
}

// ---------------------------------------------------------------- quantum

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub delta: f64,
    pub rounds_per_pair: usize,
    pub samples: u64,
}

impl CsvColumns for QuantumParams {
    fn header() -> Vec<&'static str> {
        vec!["delta", "rounds_per_pair", "samples"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![num(self.delta), text(self.rounds_per_pair), text(self.samples)]]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointSample {
    pub states: StatePair,
    pub dir_one: f64,
    pub dir_two: f64,
    pub counts: JointOutcomeCounts,
    pub mismatch_fraction: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumResults {
    pub analytic: Evaluation,
    pub empirical: Evaluation,
    /// Direct draws from the joint distribution, one entry per state pair;
    /// empty when `samples == 0`.
    pub joint_samples: Vec<JointSample>,
}

impl CsvColumns for QuantumResults {
    fn header() -> Vec<&'static str> {
        let mut h = Evaluation::header("analytic");
        h.extend(Evaluation::header("empirical"));
        h.extend(["joint_mismatch_00", "joint_mismatch_01", "joint_mismatch_10", "joint_mismatch_11"]);
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut row = self.analytic.cells(false);
        row.extend(self.empirical.cells(true));
        for k in 0..4 {
            row.push(opt_num(self.joint_samples.get(k).map(|s| s.mismatch_fraction)));
        }
        vec![row]
    }
}

pub type QuantumRun = Run<QuantumParams, QuantumResults>;

pub fn cmd_quantum(delta: f64, rounds_per_pair: usize, samples: u64, seed: u64) -> Result<QuantumRun> {
    if !(delta > 0.0 && delta < std::f64::consts::FRAC_PI_3) {
        return Err(CoordError::invalid(format!("delta must lie in (0, pi/3), got {delta}")));
    }
    let plan = AnglePlan::new(delta)?;
    let analytic = Evaluation::analytic(quantum_profile(delta)?);
    let (one, two) = quantum_player_strategy(&plan);
    let records = run_match(&one, &two, &uniform_schedule(rounds_per_pair)?, seed);
    let empirical = Evaluation::empirical(&MismatchCounts::from_records(&records))?;

    let mut joint_samples = Vec::new();
    if samples > 0 {
        let general = plan.to_general();
        for (k, states) in StatePair::ALL.into_iter().enumerate() {
            let dir_one = general.direction(crate::game::Player::One, states.player_one);
            let dir_two = general.direction(crate::game::Player::Two, states.player_two);
            let sampler = SingletSampler { seed: seed.wrapping_add(k as u64) };
            let counts = sample_joint_outcomes(dir_one, dir_two, samples, &sampler)?;
            joint_samples.push(JointSample {
                states,
                dir_one,
                dir_two,
                counts,
                mismatch_fraction: counts.mismatch_fraction(),
            });
        }
    }
    Ok(Run::new(
        "quantum",
        seed,
        QuantumParams { delta, rounds_per_pair, samples },
        QuantumResults { analytic, empirical, joint_samples },
    ))
}

// ---------------------------------------------------------------- sweep

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepParams {
    pub delta_min: f64,
    pub delta_max: f64,
    pub steps: usize,
}

impl CsvColumns for SweepParams {
    fn header() -> Vec<&'static str> {
        vec!["delta_min", "delta_max", "steps"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![num(self.delta_min), num(self.delta_max), text(self.steps)]]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOutputRow {
    pub delta: f64,
    pub q00: f64,
    pub q01: f64,
    pub payoff_quantum: f64,
    pub classical_bound_slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResults {
    pub rows: Vec<SweepOutputRow>,
}

impl CsvColumns for SweepResults {
    fn header() -> Vec<&'static str> {
        vec!["delta", "q00", "q01", "payoff_quantum", "classical_bound_slack"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![num(r.delta), num(r.q00), num(r.q01), num(r.payoff_quantum), num(r.classical_bound_slack)])
            .collect()
    }
}

pub type SweepRun = Run<SweepParams, SweepResults>;

pub fn cmd_sweep(delta_min: f64, delta_max: f64, steps: usize, seed: u64) -> Result<SweepRun> {
    let table = sweep_quantum_payoff(delta_min, delta_max, steps)?;
    let rows = table
        .rows
        .iter()
        .map(|r| SweepOutputRow {
            delta: r.delta,
            q00: r.profile.q00,
            q01: r.profile.q01,
            payoff_quantum: r.payoff,
            classical_bound_slack: classical_bound(&r.profile).slack,
        })
        .collect();
    Ok(Run::new("sweep", seed, SweepParams { delta_min, delta_max, steps }, SweepResults { rows }))
}

// ---------------------------------------------------------------- lhv

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LhvParams {
    pub restarts: usize,
    pub steps: usize,
}

impl CsvColumns for LhvParams {
    fn header() -> Vec<&'static str> {
        vec!["restarts", "steps"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![text(self.restarts), text(self.steps)]]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LhvVertex {
    pub index: usize,
    pub one: [crate::game::Move; 2],
    pub two: [crate::game::Move; 2],
    pub profile: MismatchProfile,
    pub satisfies_bound: bool,
    pub witness_weight: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LhvResults {
    pub vertices: Vec<LhvVertex>,
    pub all_vertices_satisfy_bound: bool,
    pub supremum: f64,
    pub witness_q: f64,
    pub witness_profile: MismatchProfile,
    pub witness_payoff: f64,
    pub hill_climb_best: f64,
}

impl CsvColumns for LhvResults {
    fn header() -> Vec<&'static str> {
        let mut h = vec!["vertex", "m1_0", "m1_1", "m2_0", "m2_1", "d00", "d01", "d10", "d11", "satisfies_bound"];
        h.extend([
            "witness_weight",
            "all_vertices_satisfy_bound",
            "supremum",
            "witness_q",
            "witness_q00",
            "witness_q01",
            "witness_q10",
            "witness_q11",
            "witness_payoff",
            "hill_climb_best",
        ]);
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.vertices
            .iter()
            .map(|v| {
                let mut row = vec![text(v.index), text(v.one[0]), text(v.one[1]), text(v.two[0]), text(v.two[1])];
                row.extend(profile_cells(&v.profile));
                row.push(text(v.satisfies_bound));
                row.push(num(v.witness_weight));
                row.push(text(self.all_vertices_satisfy_bound));
                row.push(num(self.supremum));
                row.push(num(self.witness_q));
                row.extend(profile_cells(&self.witness_profile));
                row.push(num(self.witness_payoff));
                row.push(num(self.hill_climb_best));
                row
            })
            .collect()
    }
}

pub type LhvRun = Run<LhvParams, LhvResults>;

pub fn cmd_lhv(seed: u64) -> Result<LhvRun> {
    let optimum = lhv_supremum_payoff()?;
    let witness_profile = lhv_profile(&optimum.witness);
    let vertices = enumerate_deterministic_pairs()
        .into_iter()
        .map(|(pair, profile)| LhvVertex {
            index: pair.index(),
            one: pair.one,
            two: pair.two,
            profile,
            satisfies_bound: classical_bound(&profile).holds,
            witness_weight: optimum.witness.weights()[pair.index()],
        })
        .collect();
    let hill_climb_best = lhv_hill_climb(LHV_RESTARTS, LHV_STEPS, seed);
    if hill_climb_best > optimum.supremum + 1e-9 {
        return Err(CoordError::Invariant(format!("hill climb reached {hill_climb_best} > 3")));
    }
    Ok(Run::new(
        "lhv",
        seed,
        LhvParams { restarts: LHV_RESTARTS, steps: LHV_STEPS },
        LhvResults {
            vertices,
            all_vertices_satisfy_bound: vertices_satisfy_classical_bound(),
            supremum: optimum.supremum,
            witness_q: optimum.witness_flip_fraction,
            witness_profile,
            witness_payoff: payoff(&witness_profile)?,
            hill_climb_best,
        },
    ))
}

// ---------------------------------------------------------------- bounds

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsParams {
    pub profile: MismatchProfile,
}

impl CsvColumns for BoundsParams {
    fn header() -> Vec<&'static str> {
        PROFILE_COLS.to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![profile_cells(&self.profile)]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsResults {
    pub classical: BoundVerdict,
    pub quantum: BoundVerdict,
    pub payoff: Option<f64>,
    pub degenerate: bool,
}

impl CsvColumns for BoundsResults {
    fn header() -> Vec<&'static str> {
        vec!["classical_holds", "classical_slack", "quantum_holds", "quantum_slack", "payoff", "degenerate"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut row = verdict_cells(&self.classical);
        row.extend(verdict_cells(&self.quantum));
        row.push(opt_num(self.payoff));
        row.push(text(self.degenerate));
        vec![row]
    }
}

pub type BoundsRun = Run<BoundsParams, BoundsResults>;

pub fn cmd_bounds(q: [f64; 4], seed: u64) -> Result<BoundsRun> {
    let profile = MismatchProfile::from_array(q)?;
    let payoff = match payoff(&profile) {
        Ok(p) => Some(p),
        Err(CoordError::DegenerateProfile) => None,
        Err(e) => return Err(e),
    };
    Ok(Run::new(
        "bounds",
        seed,
        BoundsParams { profile },
        BoundsResults {
            classical: classical_bound(&profile),
            quantum: quantum_bound(&profile),
            payoff,
            degenerate: payoff.is_none(),
        },
    ))
}

// ---------------------------------------------------------------- match

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyKind {
    Classical,
    Quantum,
}

impl FromStr for StrategyKind {
    type Err = CoordError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(StrategyKind::Classical),
            "quantum" => Ok(StrategyKind::Quantum),
            other => Err(CoordError::invalid(format!("unknown strategy {other:?}"))),
        }
    }
}

impl Display for StrategyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StrategyKind::Classical => "classical",
            StrategyKind::Quantum => "quantum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchParams {
    pub strategy: StrategyKind,
    pub n: usize,
    pub q: f64,
    pub mode: ChannelMode,
    pub delta: f64,
    pub rounds_per_pair: usize,
}

impl CsvColumns for MatchParams {
    fn header() -> Vec<&'static str> {
        vec!["strategy", "n", "q", "mode", "delta", "rounds_per_pair"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            text(self.strategy),
            text(self.n),
            num(self.q),
            text(self.mode),
            num(self.delta),
            text(self.rounds_per_pair),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchResults {
    pub empirical_profile: MismatchProfile,
    pub records: Vec<RoundRecord>,
}

impl CsvColumns for MatchResults {
    fn header() -> Vec<&'static str> {
        vec!["round_index", "state_one", "state_two", "move_one", "move_two"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.records
            .iter()
            .map(|r| {
                vec![
                    text(r.round_index),
                    text(r.states.player_one),
                    text(r.states.player_two),
                    text(r.move_one),
                    text(r.move_two),
                ]
            })
            .collect()
    }
}

pub type MatchRun = Run<MatchParams, MatchResults>;

pub fn cmd_match(params: MatchParams, seed: u64) -> Result<MatchRun> {
    let schedule = uniform_schedule(params.rounds_per_pair)?;
    let records = match params.strategy {
        StrategyKind::Classical => {
            let sequences = generate_sequences(&ClassicalConfig::new(params.n, params.q, params.mode, seed))?;
            let (one, two) = classical_strategy_pair(sequences);
            run_match(&one, &two, &schedule, seed)
        }
        StrategyKind::Quantum => {
            let (one, two) = quantum_player_strategy(&AnglePlan::new(params.delta)?);
            run_match(&one, &two, &schedule, seed)
        }
    };
    let empirical_profile = MismatchCounts::from_records(&records).profile()?;
    Ok(Run::new("match", seed, params, MatchResults { empirical_profile, records }))
}
