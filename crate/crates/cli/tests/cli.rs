use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};

fn spectra(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_spectra")).args(args).env_remove("SPECTRA_SEED").output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn envelope_shape() {
    let (code, v) = spectra(&["rank", "--matroid", "vamos", "--set", "1,4,5,6"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "rank");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["rank"], 3);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn vamos_fixture_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let (_, v) = spectra(&["vamos"]);
    assert_eq!(v["result"]["bases"].as_array().unwrap().len(), 65);
    let path = write(dir.path(), "v8.json", &v["result"]);
    let (code, r) = spectra(&["rank", "--matroid", &path, "--set", "1,2,3,4"]);
    assert_eq!((code, r["result"]["rank"].clone()), (0, json!(3)));
    let (code, r) = spectra(&["ingleton", "--matroid", &path, "--quadruple", "paper"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["deficit"], 1);
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = spectra(&["polymatroid-check", "--matroid", "vamos"]);
    assert_eq!(code, 0);
    let bad_table = write(dir.path(), "r.json", &json!({"n": 1, "values": [1, 0]}));
    let (code, v) = spectra(&["polymatroid-check", "--table", &bad_table]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "violation");
    let broken = write(dir.path(), "m.json", &json!({"n": 4, "bases": [[1, 2], [3, 4]]}));
    let (code, v) = spectra(&["counterexample", "--matroid", &broken]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    let (code, _) = spectra(&["counterexample", "--matroid", "uniform:2:4", "--samples", "50", "--dirs", "5"]);
    assert_eq!(code, 0);
}

#[test]
fn budgets_name_their_flag() {
    let (code, v) = spectra(&["ingleton", "--matroid", "vamos", "--scan", "full"]);
    assert_eq!(code, 2);
    assert!(v["result"]["error"].as_str().unwrap().contains("--full-scan-limit"));

    let dir = tempfile::tempdir().unwrap();
    let m = 3;
    let id: Vec<Vec<&str>> = (0..m).map(|i| (0..m).map(|j| if i == j { "1" } else { "0" }).collect()).collect();
    let rep = write(dir.path(), "rep.json", &json!({"size": m, "pencil": [{"rows": m, "cols": m, "hermitian": true, "entries": id}]}));
    let (code, v) = spectra(&["expand-det", "--rep", &rep, "--max-matrix-size", "2"]);
    assert_eq!(code, 2);
    assert!(v["result"]["error"].as_str().unwrap().contains("--max-matrix-size"));
    let (code, v) = spectra(&["expand-det", "--rep", &rep]);
    assert_eq!(code, 0);
    // det(I + x I_3) = (1 + x)^3
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn seeded_commands_reproduce_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let (_, h) = spectra(&["bases-poly", "--matroid", "uniform:2:3"]);
    let poly = write(dir.path(), "h.json", &h["result"]);
    let a = Command::new(env!("CARGO_BIN_EXE_spectra")).args(["rz-check", "--poly", &poly, "--dirs", "10", "--seed", "9"]).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_spectra")).args(["rz-check", "--poly", &poly, "--dirs", "10"]).env("SPECTRA_SEED", "9").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"]["seed"], 9);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn rz_check_flags_a_non_real_zero_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", &json!({"vars": 2, "terms": [{"c": "1", "e": [0, 0]}, {"c": "1", "e": [2, 0]}, {"c": "1", "e": [0, 2]}]}));
    let (code, v) = spectra(&["rz-check", "--poly", &p, "--dirs", "5"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["seed"], 42);
}

#[test]
fn representation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let b = write(dir.path(), "b.json", &json!({"rows": 1, "cols": 2, "entries": [["1", {"re": "0", "im": "1"}]]}));
    let (code, v) = spectra(&["cauchy-binet", "--matrix", &b]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], json!({"vars": 2, "terms": [{"c": "1", "e": [1, 0]}, {"c": "1", "e": [0, 1]}]}));

    let rep = write(dir.path(), "rep.json", &json!({"size": 1, "pencil": [{"rows": 1, "cols": 1, "hermitian": true, "entries": [["1/2"]]}]}));
    let good = write(dir.path(), "good.json", &json!({"vars": 1, "terms": [{"c": "1", "e": [0]}, {"c": "1/2", "e": [1]}]}));
    let bad = write(dir.path(), "bad.json", &json!({"vars": 1, "terms": [{"c": "1", "e": [0]}, {"c": "1", "e": [1]}]}));
    assert_eq!(spectra(&["verify-rep", "--poly", &good, "--rep", &rep]).0, 0);
    let (code, v) = spectra(&["verify-rep", "--poly", &bad, "--rep", &rep]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["monomial"], json!([1]));

    let npsd = write(dir.path(), "npsd.json", &json!({"size": 1, "pencil": [{"rows": 1, "cols": 1, "entries": [[-1.0]]}]}));
    let (code, v) = spectra(&["reduce-rep", "--rep", &npsd, "--degree", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["failure"]["stage"], "preconditions");
    let (code, v) = spectra(&["reduce-rep", "--rep", &rep, "--degree", "1"]);
    assert_eq!(code, 1, "{v}");
}

#[test]
fn hyperbolic_rank_and_jumpsystem() {
    let dir = tempfile::tempdir().unwrap();
    let (_, h) = spectra(&["bases-poly"]);
    let poly = write(dir.path(), "h.json", &h["result"]);
    let (code, v) = spectra(&["hyperbolic-rank", "--poly", &poly, "--x", "1,0,0,1,1,1,0,0"]);
    assert_eq!((code, v["result"]["rank"].clone()), (0, json!(3)));
    let (code, v) = spectra(&["jumpsystem", "--poly", &poly]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["maximal_sum"], json!({"constant": 4}));
    let pts = write(dir.path(), "j.json", &json!({"dim": 2, "points": [[0, 0], [2, 1]]}));
    assert_eq!(spectra(&["jumpsystem", "--points", &pts]).0, 1);
}
