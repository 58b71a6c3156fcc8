use std::path::Path;
use std::process::{Command, Output};

use entangle_coord::harness::{BoundsRun, ClassicalRun, LhvRun, MatchRun, QuantumRun, SweepRun};
use serde::de::DeserializeOwned;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entangle-coord"))
        .args(args)
        .output()
        .expect("run binary")
}

fn json<T: DeserializeOwned>(args: &[&str]) -> T {
    let out = cli(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("output matches schema")
}

fn csv(args: &[&str]) -> Vec<Vec<String>> {
    let out = cli(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn column(table: &[Vec<String>], name: &str) -> Vec<String> {
    let idx = table[0].iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
    table[1..].iter().map(|row| row[idx].clone()).collect()
}

#[test]
fn classical_disjoint_payoff_is_three() {
    let run: ClassicalRun = json(&["classical", "-N", "100000", "--q", "0.1", "--mode", "disjoint-flips"]);
    assert_eq!(run.subcommand, "classical");
    assert_eq!(run.seed, 0);
    assert_eq!(run.results.analytic.report.unwrap().payoff, 3.0);
    assert_eq!(run.results.empirical.report.unwrap().payoff, 3.0);
    assert!(run.results.analytic.classical_bound.holds);
    assert_eq!(run.results.hamming_distances[2], 30_000);
}

#[test]
fn classical_infeasible_flip_count_exits_2() {
    let out = cli(&["classical", "--q", "0.4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("disjoint flip sets"), "{err}");
}

#[test]
fn classical_bsc_empirical_payoff() {
    let run: ClassicalRun = json(&["classical", "-N", "1000000", "--q", "0.05", "--mode", "bsc-chain", "--seed", "3"]);
    let report = run.results.empirical.report.unwrap();
    let sigma = report.confidence_halfwidth / entangle_coord::game::Z_95;
    assert!((report.payoff - 2.711).abs() < 4.0 * sigma, "{report:?}");
    assert!((run.results.analytic.report.unwrap().payoff - 2.71).abs() < 1e-8);
}

#[test]
fn classical_writes_sequence_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seqs.txt");
    let out = cli(&["classical", "-N", "40", "--q", "0.1", "--sequences-out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let set = entangle_coord::classical::BitSequenceSet::read_from(&path).unwrap();
    assert_eq!(set.len(), 40);
    assert_eq!(set.distance(0, 3), 12);
}

#[test]
fn quantum_reports() {
    let run: QuantumRun = json(&["quantum", "--delta", "0.1", "--rounds-per-pair", "100000", "--samples", "100000"]);
    let analytic = run.results.analytic.report.unwrap();
    assert!((analytic.payoff - 8.9402).abs() < 1e-3);
    let empirical = run.results.empirical.report.unwrap();
    // 4 sigma, i.e. about twice the reported 95% half-width
    assert!((empirical.payoff - analytic.payoff).abs() < 2.05 * empirical.confidence_halfwidth, "{empirical:?}");
    assert!(!run.results.analytic.classical_bound.holds);
    assert!(run.results.analytic.quantum_bound.holds);
    assert_eq!(run.results.joint_samples.len(), 4);

    let run: QuantumRun = json(&["quantum", "--delta", "0.01", "--rounds-per-pair", "10"]);
    assert!((run.results.analytic.report.unwrap().payoff - 8.99940).abs() < 1e-4);
}

#[test]
fn quantum_rejects_bad_delta() {
    assert_eq!(cli(&["quantum", "--delta", "2.0"]).status.code(), Some(2));
    assert_eq!(cli(&["quantum", "--rounds-per-pair", "0"]).status.code(), Some(2));
}

#[test]
fn sweep_csv_table() {
    let table = csv(&["sweep", "--format", "csv", "--delta-min", "0.01", "--delta-max", "1.0", "--steps", "100"]);
    assert_eq!(table.len(), 101);
    let payoffs: Vec<f64> = column(&table, "payoff_quantum").iter().map(|s| s.parse().unwrap()).collect();
    assert!(payoffs.windows(2).all(|w| w[1] < w[0]));
    assert!(payoffs[0] >= 8.999);
    let slacks: Vec<f64> = column(&table, "classical_bound_slack").iter().map(|s| s.parse().unwrap()).collect();
    assert!(slacks.iter().all(|&s| s < 0.0));

    let run: SweepRun = json(&["sweep"]);
    assert_eq!(run.results.rows.len(), 100);
}

#[test]
fn lhv_report() {
    let run: LhvRun = json(&["lhv"]);
    let r = &run.results;
    assert_eq!(r.supremum, 3.0);
    assert!(r.all_vertices_satisfy_bound);
    assert_eq!(r.vertices.len(), 16);
    let q = r.witness_q;
    assert_eq!(r.witness_profile.to_array(), [3.0 * q, q, q, q]);
    assert!(r.hill_climb_best <= 3.0 + 1e-9);
    let table = csv(&["lhv", "--format", "csv"]);
    assert_eq!(table.len(), 17);
}

#[test]
fn bounds_examples() {
    let run: BoundsRun = json(&["bounds", "0.3", "0.1", "0.1", "0.1"]);
    assert!(run.results.classical.holds && run.results.classical.slack.abs() < 1e-12);
    assert!(run.results.quantum.holds);
    assert!((run.results.payoff.unwrap() - 3.0).abs() < 1e-12);

    let run: BoundsRun = json(&["bounds", "1", "0", "0", "0"]);
    assert!(!run.results.classical.holds && !run.results.quantum.holds);
    assert!(run.results.degenerate);

    let run: BoundsRun = json(&["bounds", "0.0223318", "0.0024979", "0.0024979", "0.0024979"]);
    assert!(!run.results.classical.holds && run.results.quantum.holds);
    assert!((run.results.payoff.unwrap() - 8.9402).abs() < 1e-3);

    assert_eq!(cli(&["bounds", "1.5", "0", "0", "0"]).status.code(), Some(2));
}

#[test]
fn match_dump() {
    let run: MatchRun = json(&["match", "--strategy", "classical", "-N", "8", "--q", "0.125", "--rounds-per-pair", "8"]);
    assert_eq!(run.results.records.len(), 32);
    assert_eq!(run.results.empirical_profile.to_array(), [0.375, 0.125, 0.125, 0.125]);
    let table = csv(&["match", "--format", "csv", "--rounds-per-pair", "3"]);
    assert_eq!(table.len(), 13);
    assert_eq!(&table[0][table[0].len() - 5..], ["round_index", "state_one", "state_two", "move_one", "move_two"]);
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap()
}

#[test]
fn output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for (k, args) in [
        vec!["quantum", "--rounds-per-pair", "20000", "--samples", "5000", "--seed", "9"],
        vec!["classical", "-N", "5000", "--mode", "bsc-chain", "--seed", "9"],
        vec!["lhv", "--seed", "9"],
    ]
    .into_iter()
    .enumerate()
    {
        for format in ["csv", "json"] {
            let a = dir.path().join(format!("{k}a.{format}"));
            let b = dir.path().join(format!("{k}b.{format}"));
            for p in [&a, &b] {
                let mut full = args.clone();
                full.extend(["--format", format, "--out", p.to_str().unwrap()]);
                assert!(cli(&full).status.success());
            }
            assert_eq!(read(&a), read(&b), "{args:?} {format}");
        }
    }
}

#[test]
fn json_records_carry_common_fields() {
    let out = cli(&["bounds", "0.3", "0.1", "0.1", "0.1", "--seed", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["subcommand", "seed", "parameters", "results", "tool_version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["seed"], 4);
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
}
