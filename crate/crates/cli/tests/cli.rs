use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn edgetw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgetw")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const PETERSEN: &str = "# outer cycle, spokes, inner pentagram\n10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n\
0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n";

#[test]
fn analyze_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let out = edgetw(&["analyze", &write(dir.path(), "p.el", PETERSEN)]);
    assert!(out.status.success());
    let r = json_of(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["treewidth"], 4);
    assert_eq!(r["chi_prime"], 4);
    assert_eq!(r["chi_prime_method"], "exact");
    assert_eq!(r["chi_prime_fractional"], serde_json::json!({"num": 3, "den": 1}));
    assert_eq!(r["overfull"], false);
}

#[test]
fn analyze_triangle_and_apex() {
    let dir = tempfile::tempdir().unwrap();
    let r = json_of(&edgetw(&["analyze", &write(dir.path(), "k3.el", "3 3\n0 1\n1 2\n0 2\n")]));
    assert_eq!(r["overfull"], true);
    assert_eq!(r["chi_prime"], 3);

    let prefix = dir.path().join("apex");
    let out = edgetw(&["construct", "apex", "--k", "5", "--r", "2", "-o", prefix.to_str().unwrap()]);
    assert!(out.status.success());
    let sidecar = json_of(&out);
    assert_eq!(sidecar["n"], 7);
    assert_eq!(sidecar["verification"]["overfull"], true);
    let r = json_of(&edgetw(&["analyze", prefix.with_extension("el").to_str().unwrap()]));
    assert_eq!(r["verdicts"]["lemma4"], "not-applicable");
    assert_eq!(r["verdicts"]["prop3"], "pass");
    assert_eq!(r["bounds"]["eq1_treewidth"]["tight"], true);
}

#[test]
fn analyze_over_limits_marks_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let out = edgetw(&["analyze", "--limit-fractional", "5", &write(dir.path(), "p.el", PETERSEN)]);
    let r = json_of(&out);
    assert_eq!(r["chi_prime_fractional"], "skipped");
    assert_eq!(r["overfull_subgraph"], "skipped");
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = edgetw(&["analyze", &write(dir.path(), "bad.el", "3 2\n0 1\n")]);
    assert_eq!(out.status.code(), Some(2));
    let out = edgetw(&["analyze", &write(dir.path(), "loop.el", "3 1\n1 1\n")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(edgetw(&["construct", "apex", "--k", "0", "--r", "2"]).status.code(), Some(2));
    assert_eq!(edgetw(&["construct", "tight", "--k", "8", "--delta", "11", "--n", "40"]).status.code(), Some(2));
}

#[test]
fn construct_families() {
    let out = edgetw(&["construct", "tight", "--k0", "4", "--n", "44", "--json"]);
    assert!(out.status.success());
    let s = json_of(&out);
    assert_eq!(s["params"]["k"], 11);
    assert_eq!(s["m"].as_u64().unwrap() * 2, 14 * 44 - 12);
    assert_eq!(s["verification"]["decomposition_valid"], true);

    let out = edgetw(&["construct", "stars", "--p", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("5 7\n"));

    let a = edgetw(&["construct", "ktree", "--n", "12", "--k", "3", "--keep", "1/2", "--seed", "5"]);
    let b = edgetw(&["construct", "ktree", "--n", "12", "--k", "3", "--keep", "1/2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn realize_sequences() {
    let out = edgetw(&["realize", "3", "3", "3", "2", "1"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("5 6\n"));

    let out = edgetw(&["realize", "3", "3", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("l = 2"));

    let out = edgetw(&["realize", "0"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 0\n");

    assert_eq!(edgetw(&["realize", "1", "3"]).status.code(), Some(2));
    assert!(edgetw(&["realize", "--lemma7", "3", "2"]).status.success());
}

#[test]
fn decompose_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p.el", PETERSEN);
    for smooth in [false, true] {
        let mut args = vec!["decompose", graph.as_str()];
        if smooth {
            args.push("--smooth");
        }
        let out = edgetw(&args);
        assert!(out.status.success());
        let td = write(dir.path(), "td.json", std::str::from_utf8(&out.stdout).unwrap());
        let v = json_of(&edgetw(&["validate", &graph, &td]));
        assert_eq!(v["valid"], true);
        assert_eq!(v["width"], 4);
        if smooth {
            assert_eq!(v["smooth"], true);
        }
    }
    let td = write(dir.path(), "bad.json", r#"{"nodes":[0],"tree_edges":[],"bags":{"0":[0,1]}}"#);
    assert_eq!(edgetw(&["validate", &graph, &td]).status.code(), Some(1));
}

#[test]
fn sweep_is_reproducible() {
    let args = ["sweep", "ktree", "--n-min", "6", "--n-max", "10", "--k", "3", "--keep", "3/4", "--count", "20", "--seed", "9", "--json"];
    let a = edgetw(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, edgetw(&args).stdout);
    let r = json_of(&a);
    assert_eq!(r["graphs"], 20);

    let out = edgetw(&["sweep", "exhaustive", "--n-max", "5", "--statements", "prop3,lemma4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("prop3") && !text.contains("theorem3"));
}
