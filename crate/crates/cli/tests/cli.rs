use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use bmw_core::scalars::{Field, GenericField};
use serde_json::Value;

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).env_remove("BMW_CACHE_DIR").output().expect("bmw runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn duality_cached(dir: &Path) -> Output {
    bmw(&["duality", "--m", "2", "--n", "3", "--field", "modp:5", "--cache", dir.to_str().unwrap(), "--out", "json"])
}

#[test]
fn eval_loop_value() {
    let out = bmw(&["eval", "--m", "1", "--out", "json", "A ; U"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64()), (Some(1), Some(1)));
    let entry = v["entries"][0][2].as_str().unwrap();
    let f = GenericField::new();
    assert_eq!(f.parse(entry).unwrap(), f.parse("-q^2 - q^-2").unwrap());
}

#[test]
fn eval_identities() {
    let out = bmw(&["eval", "--m", "1", "--out", "json", "I"]);
    let v = json(&out);
    assert_eq!(v["entries"], serde_json::json!([[0, 0, "1"], [1, 1, "1"]]));

    let out = bmw(&["eval", "--m", "2", "--out", "json", "X ; Xi"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64()), (Some(16), Some(16)));
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    for (k, e) in entries.iter().enumerate() {
        assert_eq!(*e, serde_json::json!([k, k, "1"]));
    }
}

#[test]
fn eval_reports_positions() {
    let out = bmw(&["eval", "--m", "1", "X ; A"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at 2"), "{}", stderr(&out));
    let out = bmw(&["eval", "--m", "1", "X ; (I"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn duality_examples() {
    let out = bmw(&[
        "duality", "--grid", "1..2,2..3", "--field", "generic", "--field", "modp:5", "--out", "json", "--deterministic",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert!(v.get("run").is_none());
    assert_eq!(v["consistency"]["fields_agree"], Value::Bool(true));
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let keys: Vec<&str> = rows[0].as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec![
        "m",
        "n",
        "f",
        "field",
        "dim_total",
        "dim_algebra",
        "dim_ideal",
        "dim_W",
        "dim_quotient",
        "dim_HT",
        "dim_image_phi_f",
        "dim_commutant_quotient",
        "surjective",
        "truncation_match",
        "hom_vanishing",
    ];
    expected.sort();
    assert_eq!(keys, expected);
    for (m, n, image) in [(2, 3, 5), (1, 2, 1), (2, 2, 2)] {
        for r in rows.iter().filter(|r| r["m"] == m && r["n"] == n) {
            assert_eq!(r["surjective"], Value::Bool(true));
            assert_eq!(r["dim_image_phi_f"], image);
            assert_eq!(r["dim_commutant_quotient"], image);
        }
    }
}

#[test]
fn dims_examples() {
    let out = bmw(&[
        "dims", "--grid", "1..2,2..3", "--f", "1", "--field", "zeta:2", "--field", "modp:5", "--out", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,f,field,dim_total,dim_W,dim_quotient,dim_HT"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.contains(&"2,3,1,zeta:2,64,12,52,12"));
    assert!(rows.contains(&"2,3,1,modp:5,64,12,52,12"));
    assert!(rows.contains(&"1,2,1,zeta:2,4,1,3,1"));
    assert!(rows.contains(&"1,2,1,modp:5,4,1,3,1"));
}

#[test]
fn check_suites_pass() {
    for (suite, grid) in [("relations", ["--m", "2", "--n", "3"]), ("tangle", ["--m", "1", "--n", "2"]), ("uq-commute", ["--m", "1", "--n", "2"])] {
        let mut args = vec!["check", suite];
        args.extend(grid);
        args.extend(["--out", "json"]);
        let out = bmw(&args);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stderr(&out));
        let v = json(&out);
        let rows = v["results"].as_array().unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r["holds"] == Value::Bool(true)), "{suite}");
    }
    let out = bmw(&["check", "relations", "--m", "2", "--n", "3", "--out", "json"]);
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 10);
}

#[test]
fn second_run_hits_cache() {
    let dir = tempfile::tempdir().unwrap();
    let first = duality_cached(dir.path());
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert_eq!(json(&first)["run"]["cache_hits"], 0);
    let second = duality_cached(dir.path());
    assert_eq!(second.status.code(), Some(0));
    let v = json(&second);
    assert!(v["run"]["cache_hits"].as_u64().unwrap() >= 3);
    assert_eq!(v["results"], json(&first)["results"]);
}

#[test]
fn corrupt_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let clean = duality_cached(dir.path());
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let mut bytes = fs::read(&path).unwrap();
        let last = bytes.len() - 2;
        bytes[last] ^= 0x01;
        fs::write(&path, bytes).unwrap();
    }
    let out = duality_cached(dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("warning"), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["run"]["cache_hits"], 0);
    assert!(!v["run"]["warnings"].as_array().unwrap().is_empty());
    assert_eq!(v["results"], json(&clean)["results"]);
    // the recomputed entries were written back
    let again = duality_cached(dir.path());
    assert!(json(&again)["run"]["warnings"].as_array().unwrap().is_empty());
    assert!(json(&again)["run"]["cache_hits"].as_u64().unwrap() >= 3);
}

#[test]
fn cache_files_depend_on_field() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    bmw(&["dims", "--m", "1", "--n", "2", "--field", "zeta:2", "--cache", d]);
    let before = fs::read_dir(dir.path()).unwrap().count();
    assert!(before > 0);
    let out = bmw(&["dims", "--m", "1", "--n", "2", "--field", "zeta:3", "--cache", d, "--out", "json"]);
    assert_eq!(json(&out)["run"]["cache_hits"], 0);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2 * before);
}

#[test]
fn deterministic_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["duality", "--grid", "1..2,2..3", "--field", "modp:7", "--field", "zeta:5/3", "--out", "json", "--deterministic"];
    let plain = bmw(&args);
    let mut cached_args = args.to_vec();
    cached_args.extend(["--cache", d]);
    let cold = bmw(&cached_args);
    let warm = bmw(&cached_args);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
    // only the cache flag in the config echo differs from the uncached run
    let (mut a, mut b) = (json(&plain), json(&cold));
    a["config"]["cache"] = Value::Null;
    b["config"]["cache"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(bmw(&["dims", "--m", "2"]).status.code(), Some(2));
    assert_eq!(bmw(&["dims", "--m", "2", "--n", "1"]).status.code(), Some(2));
    assert_eq!(bmw(&["dims", "--m", "2", "--n", "3", "--f", "3"]).status.code(), Some(2));
    assert_eq!(bmw(&["duality", "--m", "2", "--n", "3", "--f", "0"]).status.code(), Some(2));
    assert_eq!(bmw(&["dims", "--grid", "1..2"]).status.code(), Some(2));
    assert_eq!(bmw(&["dims", "--m", "1", "--n", "2", "--field", "zeta:-1"]).status.code(), Some(2));
    assert_eq!(bmw(&["dims", "--m", "1", "--n", "2", "--field", "modp:6"]).status.code(), Some(2));
    assert_eq!(bmw(&["frobnicate"]).status.code(), Some(2));
    // size guard: refused over Q(q), allowed elsewhere
    let out = bmw(&["dims", "--m", "2", "--n", "6", "--f", "3", "--out", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let notes = json(&out)["notes"].clone();
    assert!(notes[0].as_str().unwrap().contains("--force-generic"), "{notes}");
    assert_eq!(bmw(&["dims", "--m", "2", "--n", "6", "--f", "3", "--field", "modp:5"]).status.code(), Some(0));
    // success
    assert_eq!(bmw(&["dims", "--m", "1", "--n", "2"]).status.code(), Some(0));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bmw"))
            .args(["dims", "--m", "1", "--n", "3", "--out", "json"])
            .env("BMW_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    run();
    assert!(fs::read_dir(dir.path()).unwrap().count() > 0);
    assert!(json(&run())["run"]["cache_hits"].as_u64().unwrap() > 0);
}
