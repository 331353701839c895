//! End-to-end runs of the `torus-dispersion` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torus-dispersion"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

const WORKED: &str = "0.1,0.3\n0.3,0.7\n0.6,0.2\n0.8,0.9\n";

#[test]
fn compute_equispaced_one_dimensional() {
    let out = run(&["compute", "--gen", r#"{"kind":"equispaced-1d","n":4}"#]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["volume"], 0.25);
    assert_eq!(r["meets_theorem1"], true);
    assert_eq!(r["witness_empty"], true);
    assert_eq!(r["wall_time_ms"], Value::Null);
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["n", "d", "ranges", "mode", "volume", "witness", "exact", "bound_theorem1", "bound_split_cube", "meets_theorem1", "candidates_examined", "wall_time_ms"] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn worked_set_from_stdin() {
    let out = run_stdin(&["compute", "--input", "-", "--mode", "witness"], &format!("x,y\n{WORKED}"));
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let r = json(&out);
    assert_eq!(r["n"], 4);
    assert_eq!(r["volume"], 0.5);
    assert_eq!(r["witness"]["anchors"], serde_json::json!([0.1, 0.7]));
    assert_eq!(r["witness"]["lengths"], serde_json::json!([0.5, 1.0]));

    let exact = json(&run_stdin(&["compute", "--input", "-", "--rational"], WORKED));
    assert!(exact["volume"].as_f64().unwrap() >= 0.5);
    assert_eq!(exact["exact"], true);
    assert!(exact["volume_exact"].as_str().unwrap().contains('/'));
}

#[test]
fn witness_subcommand_full_volume() {
    let out = run(&["witness", "--gen", r#"{"kind":"random","n":3,"d":5,"seed":2}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["volume"], 1.0);
}

#[test]
fn input_errors_exit_3() {
    let ragged = run_stdin(&["compute", "--input", "-"], "0.1,0.2\n0.3,0.4\n0.1,0.2,0.3\n");
    assert_eq!(ragged.status.code(), Some(3));
    let err = json(&ragged);
    assert_eq!(err["exit_code"], 3);
    assert!(err["error"]["message"].as_str().unwrap().contains("line 3"));

    let text = run_stdin(&["compute", "--input", "-"], "0.1,0.2\nabc,0.4\n");
    assert_eq!(text.status.code(), Some(3));

    let empty = run_stdin(&["compute", "--input", "-"], "");
    assert_eq!(empty.status.code(), Some(3));
    let empty_with_dim = run_stdin(&["compute", "--input", "-", "--dim", "2"], "");
    assert_eq!(empty_with_dim.status.code(), Some(0));
    assert_eq!(json(&empty_with_dim)["volume"], 1.0);

    let gap = run(&["compute", "--gen", r#"{"kind":"random","n":3,"d":2,"seed":1}"#, "--mode", "gap1d"]);
    assert_eq!(gap.status.code(), Some(3));
    assert_eq!(run(&["compute", "--gen", "{not json"]).status.code(), Some(3));
    assert_eq!(run(&["compute", "--input", "/nonexistent/points.csv"]).status.code(), Some(3));
    assert_eq!(run(&["compute", "--no-such-flag"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_exceeded_exits_2() {
    let out = run(&["compute", "--gen", r#"{"kind":"random","n":20,"d":3,"seed":1}"#, "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    let err = json(&out);
    assert_eq!(err["exit_code"], 2);
    assert_eq!(err["error"]["kind"], "budget-exceeded");
}

#[test]
fn verify_passes() {
    let suite = run(&["verify", "--random-suite", "200", "--seed", "11"]);
    assert_eq!(suite.status.code(), Some(0), "{}", stdout(&suite));
    let grid = run(&["verify", "--gen", r#"{"kind":"grid","m":3,"d":2}"#]);
    assert_eq!(grid.status.code(), Some(0));
    let dup = run_stdin(&["verify", "--input", "-", "--mode", "witness"], &"0.4,0.4\n".repeat(5));
    assert_eq!(dup.status.code(), Some(0), "{}", stdout(&dup));
    let w = json(&run_stdin(&["witness", "--input", "-"], &"0.4,0.4\n".repeat(5)));
    assert_eq!(w["volume"], 1.0);
}

#[test]
fn gap1d_mode() {
    let out = run_stdin(&["compute", "--input", "-", "--mode", "gap1d", "--rational"], "0.5\n0\n0.25\n");
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["volume_exact"], "1/2");
    assert_eq!(r["method"], "gap-scan-1d");
}

#[test]
fn sweep_fibonacci_meets_bound() {
    let out = run(&["sweep", "--kind", "fibonacci", "--n", "5,8,13,21"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("kind,n,d,mode,volume,theorem1_bound,ratio\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!(row[6].parse::<f64>().unwrap() >= 1.0 - 1e-12, "{row:?}");
    }
}

#[test]
fn sweep_witness_grows_with_dimension() {
    let out = run(&["sweep", "--kind", "kronecker", "--n", "8", "--d", "1,2,3,4,5,6,7,8", "--mode", "witness"]);
    assert_eq!(out.status.code(), Some(0));
    let volumes: Vec<f64> = csv_rows(&stdout(&out)).iter().map(|r| r[4].parse().unwrap()).collect();
    assert_eq!(volumes.len(), 8);
    assert!(volumes.windows(2).all(|w| w[0] <= w[1]), "{volumes:?}");
    assert_eq!(volumes[7], 1.0);
}

#[test]
fn empty_sweep_is_header_only() {
    let out = run(&["sweep", "--kind", "random", "--n"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "kind,n,d,mode,volume,theorem1_bound,ratio\n");
}

#[test]
fn generate_round_trips_through_compute() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("fib.csv");
    let out = run(&["generate", "--gen", r#"{"kind":"fibonacci","n":8}"#, "--output", points.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report = dir.path().join("report.json");
    let out = run(&["compute", "--input", points.to_str().unwrap(), "--output", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["n"], 8);
    assert_eq!(r["volume"], 0.25);
}

#[test]
fn csv_report_format() {
    let out = run(&["compute", "--gen", r#"{"kind":"grid","m":2,"d":2}"#, "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().next().unwrap().starts_with("n,d,"));
}

#[test]
fn bounds_subcommand() {
    let r = json(&run(&["bounds", "--n", "1", "--d", "2"]));
    assert_eq!(r["ahr_lower"], 0.125);
    assert!(r["hinrichs_constant"].as_f64().unwrap() >= 0.004229);
}

#[test]
fn output_is_identical_across_workers() {
    let args = ["compute", "--gen", r#"{"kind":"random","n":10,"d":3,"seed":4}"#];
    let reference = run(&args).stdout;
    for workers in ["1", "2", "8"] {
        let mut with = args.to_vec();
        with.extend(["--workers", workers]);
        assert_eq!(run(&with).stdout, reference, "workers = {workers}");
    }
}
