use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_valid_lca() {
    let o = run(&["check", &data("lca.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS BC3"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn check_symmetry_violation() {
    let o = run(&["check", &data("bad.json")]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL C2  witness: [[0],[]]"), "{s}");
}

#[test]
fn roundtrip_full_pair() {
    let o = run(&["roundtrip", &data("zlba.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS t is a homeomorphism"));
    assert!(s.contains("PASS λ is an isomorphism"));
}

#[test]
fn parse_failures_exit_2() {
    assert_eq!(run(&["check", &data("broken.json")]).status.code(), Some(2));
    assert_eq!(run(&["check", &data("missing.json")]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn max_atoms_override() {
    assert_eq!(run(&["--max-atoms", "4", "check", &data("p5.json")]).status.code(), Some(2));
    assert_eq!(run(&["--max-atoms", "5", "check", &data("p5.json")]).status.code(), Some(0));
}

#[test]
fn fincofin_is_not_zlba() {
    let o = run(&["check", &data("fin.json")]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("PASS LBA") && s.contains("PASS PLBA"));
    assert!(s.contains("FAIL ZLBA  witness: \"Fin({k : k mod 2 in {0}})\""), "{s}");
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["--format", "json", "complete", "lca.json"],
        vec!["--format", "json", "dualize", "vee.json"],
        vec!["--format", "json", "classify-map", "map.json"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".json") { data(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["status"], 0);
    }
}

#[test]
fn dot_output() {
    let o = run(&["--format", "dot", "absolute", &data("vee.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("digraph absolute {"));
    assert_eq!(run(&["--format", "dot", "weight", &data("lca.json")]).status.code(), Some(2));
}

#[test]
fn completion_rejects_non_lca() {
    let o = run(&["complete", &data("graph.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("BC3"));
}

#[test]
fn product_of_two_files() {
    let o = run(&["product", &data("lca.json"), &data("lca.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS dual of product ≅ sum of duals"));
}

#[test]
fn algebra_map_classification() {
    let o = run(&["classify-map", &data("hom.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS Boolean homomorphism"));
    assert!(s.contains("PASS dual map is perfect"));
}

#[test]
fn seed_changes_order_not_verdicts() {
    let a = run(&["--format", "json", "--seed", "1", "invariants", "--size", "2"]);
    let b = run(&["--format", "json", "--seed", "99", "invariants", "--size", "2"]);
    assert_eq!(a.status.code(), Some(0));
    let va: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(va["checks"], vb["checks"]);
    assert_eq!(va["data"]["sweeps"], vb["data"]["sweeps"]);
}
