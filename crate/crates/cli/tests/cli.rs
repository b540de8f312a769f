use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bqt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn dims(table: &Value) -> Vec<(u64, u64, Value)> {
    table["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["k"].as_u64().unwrap(), c["d"].as_u64().unwrap(), c["dim"].clone()))
        .collect()
}

#[test]
fn bqt_suite_on_poly_passes() {
    let o = bqt(&["check", "bqt", "--module", "poly", "--n", "3", "--kmax", "3", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["all_pass"], true);
    assert_eq!(r["reports"].as_array().unwrap().len(), 15);
}

#[test]
fn daha_suite_on_induced_module_passes() {
    let o = bqt(&["check", "daha", "--module", "murnaghan", "--shape", "1", "--n", "3", "--dmax", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bad_shape_is_a_config_error() {
    let o = bqt(&["check", "daha", "--module", "murnaghan", "--shape", "1,2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("weakly decreasing"));
}

#[test]
fn missing_rank_is_a_config_error() {
    assert_eq!(bqt(&["check", "aux"]).status.code(), Some(2));
    assert_eq!(bqt(&["check", "nonsense", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn controls_exit_one_with_counterexamples() {
    let o = bqt(&["check", "daha", "--n", "2", "--sign-flip"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    let quad = r["reports"].as_array().unwrap().iter().find(|x| x["relation_id"] == "daha.1").unwrap();
    assert_eq!(quad["counterexample"]["vector"], "x_1");

    let o = bqt(&["check", "compat", "--n", "2", "--broken-connector"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    let four = r["reports"].as_array().unwrap().iter().find(|x| x["relation_id"] == "compat.4").unwrap();
    assert_eq!(four["status"], "fail");
}

#[test]
fn theta_suite_passes() {
    let o = bqt(&["check", "theta", "--size", "2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn act_on_text_vectors() {
    let o = bqt(&["act", "--n", "2", "--word", r#"[["X",1]]"#, "--vector", "1"]);
    assert_eq!(stdout(&o), "x_1");
    let o = bqt(&["act", "--n", "2", "--word", r#"[["dplus"]]"#, "--vector", "1"]);
    assert_eq!(stdout(&o), "x_1");
    let o = bqt(&["act", "--n", "2", "--word", r#"[["dminus"]]"#, "--vector", "x_1", "--flavor", "1"]);
    assert_eq!(stdout(&o), "(q-1)*x_1 + (q-1)*x_2");
}

#[test]
fn act_keeps_json_vectors_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let word = dir.path().join("w.json");
    fs::write(&word, r#"[["T",1]]"#).unwrap();
    let arg = format!("@{}", word.display());
    let o = bqt(&["act", "--n", "2", "--word", &arg, "--vector", r#"[{"exponents":[1,0],"coeff":"1"}]"#]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let expect = r#"[{"exponents":[1,0],"coeff":"-q+1"},{"exponents":[0,1],"coeff":"1"}]"#;
    assert_eq!(v, serde_json::from_str::<Value>(expect).unwrap());
    let bad = bqt(&["act", "--n", "2", "--word", r#"[["Q",1]]"#, "--vector", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn limit_table_for_polynomials() {
    let o = bqt(&["limit", "--seq", "pol", "--kmax", "2", "--dmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let t = json(&o);
    let row0: Vec<u64> = dims(&t).iter().filter(|c| c.0 == 0).map(|c| c.2.as_u64().unwrap()).collect();
    assert_eq!(row0, vec![1, 1, 2, 3, 5]);
    assert!(t["cells"][0]["n_stabilized"].is_number());
    assert_eq!(t["cells"][0]["mode"], "exact");
}

#[test]
fn empty_shape_table_equals_polynomial_table() {
    let a = json(&bqt(&["limit", "--seq", "pol", "--kmax", "2", "--dmax", "4"]));
    let b = json(&bqt(&["limit", "--seq", "mur", "--shape", "0", "--kmax", "2", "--dmax", "4"]));
    assert_eq!(dims(&a), dims(&b));
}

#[test]
fn murnaghan_one_table_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = bqt(&["limit", "--seq", "mur", "--shape", "1", "--kmax", "2", "--dmax", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let golden = include_str!("golden/murnaghan_1.json");
    assert_eq!(fs::read_to_string(&out).unwrap(), golden);
}

#[test]
fn unresolved_cells_warn_but_succeed() {
    let o = bqt(&["dims", "--ncap", "3", "--kmax", "0", "--dmax", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("did not stabilize"));
    assert!(stdout(&o).ends_with('?'));
}

#[test]
fn reports_are_reproducible() {
    let args = ["check", "daha", "--n", "3", "--dmax", "2", "--probabilistic", "--seed", "7"];
    let (a, b) = (bqt(&args), bqt(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bqt"))
        .env("BQT_JOBS", "1")
        .args(["dims", "--kmax", "1", "--dmax", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("k=0: 1 1 2 3"));
}
