use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lierad::format::{load_algebra, save_algebra};
use lierad_core::corpus;

fn lierad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lierad")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn validate_accepts_heisenberg_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "heis3.json",
        r#"{"name":"heis3","dim":3,"basis":["x","y","z"],"brackets":[{"i":0,"j":1,"coefficients":["0","0","1"]}]}"#,
    );
    let o = lierad(&["validate", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dimension 3"));
}

#[test]
fn validate_reports_field_locus() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", r#"{"name":"bad","dim":2,"brackets":[{"i":0,"j":7,"coefficients":["0","1"]}]}"#);
    let o = lierad(&["validate", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("brackets[0].j"), "{}", stderr(&o));
}

#[test]
fn validate_reports_jacobi_failure() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        r#"{"name":"bad","dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"coefficients":["0","0","1"]},{"i":0,"j":2,"coefficients":["1","0","0"]}]}"#,
    );
    let o = lierad(&["validate", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Jacobi"), "{}", stderr(&o));
}

#[test]
fn analyze_json_is_deterministic() {
    let a = lierad(&["analyze", "corpus:heis3", "--json"]);
    let b = lierad(&["analyze", "corpus:heis3", "--json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["frattini_ideal"]["kind"], "Exact");
    assert_eq!(v["frattini_ideal"]["lower"]["basis"], serde_json::json!([["0", "0", "1"]]));
    assert_eq!(v["index_class"]["class"], "C2");
}

#[test]
fn frattini_of_ut4_is_an_interval() {
    let o = lierad(&["frattini", "corpus:ut:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("between"), "{}", stdout(&o));
}

#[test]
fn radical_and_classify_commands() {
    let o = lierad(&["radical", "nilrad", "corpus:aff1"]);
    assert_eq!(stdout(&o).trim(), "nilrad(aff1) = span{x} (dim 1)");
    let o = lierad(&["classify", "corpus:sl2sl2", "--identity-witness"]);
    assert_eq!(stdout(&o).trim(), "sl2sl2: ClassI");
    let o = lierad(&["radical", "bogus", "corpus:aff1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lierad(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lierad(&["analyze", "corpus:nope"]).status.code(), Some(2));
    assert_eq!(lierad(&[]).status.code(), Some(2));
}

#[test]
fn chains_commands() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "fam.json",
        r#"{"ambient_dim":3,"members":[[["1","0","0"],["0","1","0"]],[["0","1","0"],["0","0","1"]]]}"#,
    );
    let o = lierad(&["chains", &f, "p-completion", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
    let o = lierad(&["chains", &f, "meet", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basis"], serde_json::json!([["0", "1", "0"]]));
    let o = lierad(&["chains", &f, "p-completion", "--completion-bound", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = lierad(&["chains", &f, "restrict", "1,0,0;0,1,0"]);
    assert!(stdout(&o).starts_with("2 members"), "{}", stdout(&o));
}

#[test]
fn suite_passes() {
    let o = lierad(&["suite", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true, "{}", stdout(&o));
    assert_eq!(v["criteria"].as_array().unwrap().len(), 12);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn save_then_load_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (name, l) in corpus::standard() {
        let p = dir.path().join("alg.json");
        save_algebra(&name, &l, &p).unwrap();
        let (back_name, back) = load_algebra(&p).unwrap();
        assert_eq!((back_name.as_str(), &back), (name.as_str(), &l));
        let again = dir.path().join("again.json");
        save_algebra(&back_name, &back, &again).unwrap();
        assert_eq!(fs::read(&p).unwrap(), fs::read(&again).unwrap());
    }
}
