use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dopekit").chain(args.iter().copied());
    let code = dopekit_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dope_prints_rows() {
    let (code, out, _) = run(&["dope", "--poly", "x^2-1", "--lambda", "0,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("010\n100\n"), "{out}");
    let v = json(&["dope", "--poly", "x^2-1", "--lambda", "0,1"]);
    assert_eq!(v["dope"]["rows"], serde_json::json!(["010", "100"]));
}

#[test]
fn domain_errors_exit_3() {
    let (code, _, err) = run(&["dope", "--poly", "0", "--lambda", "0"]);
    assert_eq!(code, 3);
    assert!(err.contains("zero polynomial"));
    let (code, _, err) = run(&["dope", "--poly", "x", "--lambda", "0,1,pi", "--signed"]);
    assert_eq!(code, 3);
    assert!(err.contains("sign undefined"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["dope", "--poly", "x^"]).0, 2);
    assert_eq!(run(&["dope", "--poly", "x^+", "--lambda", "0"]).0, 2);
    assert_eq!(run(&["check", "--matrix", "01/2"]).0, 2);
    assert_eq!(run(&["--threads", "0", "table", "--n-max", "1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn check_verdicts() {
    let (code, out, _) = run(&["check", "--matrix", "000/000"]);
    assert_eq!(code, 0);
    assert!(out.contains("T: true"));
    let (code, out, _) = run(&["check", "--matrix", "001/000"]);
    assert_eq!(code, 1);
    assert!(out.contains("more than 0 ones"), "{out}");
    let (_, out, _) = run(&["check", "--matrix", "010/000/000"]);
    assert!(out.contains("membership requires --lambda"));
    assert_eq!(run(&["check", "--matrix", "100/000/000", "--lambda", "0,1,2"]).0, 0);
    assert_eq!(run(&["check", "--matrix", "010/010/010", "--lambda", "0,1,2"]).0, 1);
}

#[test]
fn table_rows() {
    let v = json(&["table", "--n-max", "3", "--lambda", "0,1,2", "--lambda", "0,1,pi"]);
    assert_eq!(v["rows"][0]["counts"], serde_json::json!([1, 4, 17, 86]));
    assert_eq!(v["rows"][1]["counts"], serde_json::json!([1, 4, 19, 98]));
    let (code, out, _) = run(&["--format", "csv", "table", "--n-max", "1", "--lambda", "0,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "lambda,0,1\n\"(0,1,2)\",1,4\n");
}

#[test]
fn flat_cap_exits_4() {
    let out = Command::new(env!("CARGO_BIN_EXE_dopekit"))
        .args(["enumerate", "--lambda", "0,1,2", "--n", "3", "--summary"])
        .env("DOPEKIT_FLAT_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_dopekit"))
        .args(["enumerate", "--lambda", "0,1,2", "--n", "3", "--summary"])
        .env("DOPEKIT_FLAT_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_ignores_thread_count() {
    let args = |t: &'static str| vec!["--threads", t, "--format", "json", "enumerate", "--lambda", "0,1,3", "--n", "3"];
    let one = run(&args("1"));
    let four = run(&args("4"));
    assert_eq!(one.0, 0);
    assert_eq!(one.1, four.1);
    assert_eq!(one.1.lines().count(), 92);
    let flats = |t: &'static str| run(&["--threads", t, "matroid-flats", "--lambda", "0,1,2", "--n", "2"]).1;
    assert_eq!(flats("1"), flats("3"));
}

#[test]
fn json_round_trips() {
    let v = json(&["dope", "--poly", "x^3-2*x", "--lambda", "0,sqrt(2)"]);
    let poly = v["poly"].to_string();
    let lambda = v["lambda"].to_string();
    let again = json(&["dope", "--poly", &poly, "--lambda", &lambda]);
    assert_eq!(v, again);

    let w = json(&["witness", "--matrix", "0100/0010/0000", "--lambda", "0,1,3"]);
    assert_eq!(w["realizable"], true);
    let matrix = w["matrix"].to_string();
    let p = w["poly"].to_string();
    let d = json(&["dope", "--poly", &p, "--lambda", "0,1,3"]);
    assert_eq!(d["dope"], w["matrix"]);
    assert_eq!(run(&["check", "--matrix", &matrix, "--lambda", "0,1,3"]).0, 0);
}

#[test]
fn witness_refusal_exits_1() {
    assert_eq!(run(&["witness", "--matrix", "01/00"]).0, 1);
    assert_eq!(run(&["witness", "--matrix", "010/010/010", "--lambda", "0,1,2"]).0, 1);
}

#[test]
fn jobs() {
    let dir = std::env::temp_dir().join(format!("dopekit-job-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.json");
    std::fs::write(&path, r#"{"command": "table", "n_max": 2, "lambda": "0,1,2", "format": "csv"}"#).unwrap();
    let (code, out, err) = run(&["job", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "lambda,0,1,2\n\"(0,1,2)\",1,4,17\n");

    std::fs::write(&path, r#"{"command": "table", "n_max": 2, "colour": "red"}"#).unwrap();
    let (code, _, err) = run(&["job", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown field"));

    std::fs::write(&path, r#"{"command": "job"}"#).unwrap();
    assert_eq!(run(&["job", path.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn counting_commands() {
    let (code, out, _) = run(&["count", "--n-max", "3", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("35"), "{out}");
    assert_eq!(run(&["gv", "--g", "0,1,2", "--h", "0,1,2"]).0, 0);
    assert_eq!(run(&["conjecture81", "--m", "3", "--n-max", "3"]).0, 0);
    assert_eq!(run(&["polya", "--matrix", "00/00"]).0, 1);
    assert_eq!(run(&["polya", "--matrix", "10/10"]).0, 0);
}
