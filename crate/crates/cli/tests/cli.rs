use std::path::PathBuf;
use std::process::{Command, Output};

fn superdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superdual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn golden(n: usize) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../core/tests/golden/table{n}.txt")).display().to_string()
}

const FORBIDDEN: &str = r#"{"p":0,"q":2,"m":2,"mu_L":[],"tau":[1,0],"mu_R":[0,0],"beta_L":"0","beta_R":"1/2"}"#;

#[test]
fn classify_yang_mills() {
    let o = superdual(&["classify", "--label", &data("yangmills.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("UnitaryShort (1/2,1/2)-BPS"));
}

#[test]
fn non_unitary_exit_code() {
    let o = superdual(&["classify", "--label", FORBIDDEN]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("NonUnitary\n"));
    let o = superdual(&["verify", "--label", FORBIDDEN, "--cutoff", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("negative norm"));
}

#[test]
fn usage_errors() {
    assert_eq!(superdual(&["classify"]).status.code(), Some(2));
    assert_eq!(superdual(&["tables", "--table", "9"]).status.code(), Some(2));
    let o = superdual(&["classify", "--label", r#"{"p":1}"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("label JSON:"));
    let o = superdual(&["weight", "--label", &data("yangmills.json"), "--grading", "su(2;2)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tables_are_byte_identical_to_goldens() {
    for n in 1..=7 {
        let o = superdual(&["tables", "--table", &n.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), std::fs::read_to_string(golden(n)).unwrap(), "table {n}");
        assert_eq!(superdual(&["tables", "--table", &n.to_string(), "--diff", &golden(n)]).status.code(), Some(0));
    }
    let o = superdual(&["tables", "--table", "2", "--diff", &golden(3)]);
    assert_eq!(o.status.code(), Some(4));
    let o = superdual(&["tables", "--table", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn emitted_json_is_accepted_back() {
    let o = superdual(&["weight", "--label", &data("yangmills.json"), "--grading", "su(2,2|4)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let weight = stdout(&o);
    let o = superdual(&["lattice", "--weight", weight.trim(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let again = serde_json::to_string_pretty(&v["weight"]).unwrap();
    assert_eq!(again, weight.trim());

    let o = superdual(&["classify", "--label", &data("yangmills.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let label = serde_json::to_string(&v["label"]).unwrap();
    assert_eq!(label, std::fs::read_to_string(data("yangmills.json")).unwrap().trim());

    let o = superdual(&["diagram", "--label", &data("yangmills.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let d = serde_json::to_string(&v["diagram"]).unwrap();
    let o2 = superdual(&["diagram", "--label", &d, "--format", "json"]);
    assert_eq!(stdout(&o2), stdout(&o));
}

#[test]
fn lattice_lists_violations() {
    let o = superdual(&["lattice", "--label", FORBIDDEN]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.contains('-'));
    assert!(!text.contains("violations: \n"));
}

#[test]
fn diagrams_and_shortening() {
    let o = superdual(&["diagram", "--label", &data("yangmills.json"), "--format", "svg"]);
    assert!(stdout(&o).starts_with("<svg"));
    let o = superdual(&["diagram", "--label", &data("yangmills.json"), "--grading", "su(2,2|4)"]);
    assert!(stdout(&o).ends_with("su(2,2|4) [-1,-1,2,0,0,0,0,0]\n"));
    let o = superdual(&["shorten", "--label", &data("yangmills.json")]);
    assert!(stdout(&o).ends_with("B[0,1,0](0,0)^(1/2,1/2)\n"));
    let o = superdual(&["do-label", "--label", &data("yangmills.json")]);
    assert_eq!(stdout(&o), "B[0,1,0](0,0)^(1/2,1/2)\n");
}

#[test]
fn tensor_of_two_b_states() {
    let b = |n: u32| format!(r#"{{"p":2,"q":2,"m":4,"mu_L":[{n},0],"tau":[0,0,0,0],"mu_R":[0,0],"beta_L":"1","beta_R":"0","gamma_L":"0","gamma_R":"0","fdelta":0,"P":1}}"#);
    let o = superdual(&["tensor", "--left", &b(2), "--right", &b(1)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[3,000,0;2,0]\n[1,000,0;3,0]\n");
}

#[test]
fn selfcheck_agrees() {
    let o = superdual(&["selfcheck", "--max-total", "4", "--cutoff", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all agree\n"));
}
