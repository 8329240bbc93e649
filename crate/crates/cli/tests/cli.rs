use std::path::Path;
use std::process::{Command, Output};

fn trip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trip")).args(args).output().expect("run trip")
}

fn csv_rows(path: &Path) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_path(path).unwrap();
    r.records().map(|x| x.unwrap()).collect()
}

#[test]
fn list_triples_has_all_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("triples.csv");
    let o = trip(&["list-triples", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 108);
    let count = |col: usize| rows.iter().filter(|r| &r[col] == "true").count();
    assert_eq!((count(1), count(2), count(3), count(4)), (47, 18, 18, 44));
}

#[test]
fn verify_branches_single_triple() {
    let o = trip(&["verify-branches", "--triple", "23,12,132", "--n", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().ends_with(",0,20,20,true"));
}

#[test]
fn tight_tolerance_exits_one() {
    let o = trip(&["eigen", "--triple", "e,e,e", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn missing_data_is_a_usage_error() {
    assert_eq!(trip(&["eigen", "--triple", "e,e,23"]).status.code(), Some(2));
    assert_eq!(trip(&["gk", "--triple", "12,e,e"]).status.code(), Some(2));
    assert_eq!(trip(&["hilbert", "--triple", "e,e,23"]).status.code(), Some(2));
    assert_eq!(trip(&["sum-bounds", "--triple", "e,e,23"]).status.code(), Some(2));
    assert_eq!(trip(&["eigen", "--triple", "e,e,7"]).status.code(), Some(2));
    assert_eq!(trip(&["hilbert", "--phi", "eta9"]).status.code(), Some(2));
    assert_eq!(trip(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gk_closed_form_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gk.csv");
    let o = trip(&["gk", "--triple", "e,23,e", "--kmax", "4", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 5);
    let p0: f64 = rows[0][1].parse().unwrap();
    let c0: f64 = rows[0][2].parse().unwrap();
    assert!((p0 - 0.5).abs() < 1e-8 && (c0 - 0.5).abs() < 1e-12);
    assert!(rows[0][3].is_empty());
}

#[test]
fn gk_simulation_is_reproducible() {
    let run = || trip(&["gk", "--triple", "e,e,e", "--kmax", "2", "--simulate", "--n", "20000", "--seed", "3"]).stdout;
    let a = run();
    assert_eq!(a, run());
    let text = String::from_utf8(a).unwrap();
    let first = text.lines().nth(1).unwrap();
    let f: Vec<&str> = first.split(',').collect();
    let emp: f64 = f[3].parse().unwrap();
    assert!((emp - 0.2531).abs() < 0.02);
}

#[test]
fn json_config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let out = dir.path().join("out.json");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"triple": "e,e,e", "kmax": 3, "format": "json", "output_path": {:?}}}"#,
            out.to_str().unwrap()
        ),
    )
    .unwrap();
    let o = trip(&["gk", "--config", cfg.to_str().unwrap(), "--kmax", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["k", "p_theoretical", "p_closed", "p_empirical", "stderr"]);
    assert!(rows[0]["p_empirical"].is_null());
}

#[test]
fn bad_config_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"trple": "e,e,e"}"#).unwrap();
    assert_eq!(trip(&["gk", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(trip(&["gk", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(trip(&["gk", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn hilbert_default_passes() {
    let o = trip(&["hilbert", "--kmax", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn orbit_reports_digits() {
    let o = trip(&["orbit", "--triple", "e,e,e", "--x", "0.7", "--y", "0.2", "--n", "3"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,digit,x,y");
    assert!(lines.len() >= 2);
    assert!(lines[1].starts_with("0,,"));
}

#[test]
fn sum_bounds_json() {
    let o = trip(&["sum-bounds", "--triple", "e,e,e", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["triple"], "e,e,e");
    assert_eq!(v[0]["pass"], true);
}
