use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-trunc"))
        .args(args)
        .env_remove("THETA_TRUNC_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = run(&["compute", "p", "--n-max", "10"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1,1,2,3,5,7,11,15,22,30,42\n");
    assert_eq!(
        stdout(&run(&["compute", "ge", "--n-max", "6"])),
        "0,0,0,1,1,2,3\n"
    );
    assert_eq!(stdout(&run(&["compute", "p", "--n-max", "0"])), "1\n");
    assert_eq!(
        stdout(&run(&["compute", "rank", "--m", "-1", "--n-max", "5"])),
        "0,0,1,0,1,1\n"
    );
}

#[test]
fn compute_formats() {
    let csv = stdout(&run(&["compute", "p3", "--n-max", "3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("n,value,source"));
    assert_eq!(csv.lines().count(), 5);
    let v: Value = serde_json::from_str(&stdout(&run(&[
        "compute", "p", "--n-max", "400", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["values"][400], "6727090051741041926");
    assert_eq!(
        run(&["compute", "p", "--n-max", "1500"]).status.code(),
        Some(2)
    );
    let big = run(&["compute", "p", "--n-max", "1500", "--bigint"]);
    assert!(big.status.success());
    let last = stdout(&big)
        .trim_end()
        .rsplit(',')
        .next()
        .unwrap()
        .to_owned();
    assert!(last.len() > 39);
}

#[test]
fn compute_usage_errors() {
    assert_eq!(run(&["compute", "q"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "Mk"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "Mk", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "I19", "--k", "0"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "I5", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "I99"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "I9", "--oracle-bound", "61"]).status.code(),
        Some(2)
    );
    let bad = run(&[
        "verify",
        "I5",
        "--k",
        "2",
        "--order",
        "40",
        "--negative-control",
        "--format",
        "json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["reports"][0]["mismatch"]["exp"], 7);
}

#[test]
fn verify_all_default_range() {
    let o = run(&["verify", "all", "--order", "200", "--k-max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("86 verified, 0 mismatched\n"));
}

#[test]
fn ineq_examples() {
    let o = run(&[
        "ineq", "F2", "--k", "1", "--n-max", "50", "--format", "json", "--rows",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["reports"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows
        .iter()
        .all(|r| !r["margin"].as_str().unwrap().starts_with('-')));
    assert_eq!(run(&["ineq", "F4", "--k", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["ineq", "all", "--k-max", "8", "--n-max", "1000"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&[
            "ineq",
            "F7",
            "--k-max",
            "3",
            "--n-max",
            "100",
            "--negative-control"
        ])
        .status
        .code(),
        Some(1)
    );
    let csv = stdout(&run(&[
        "ineq", "F5", "--k", "1", "--n-max", "4", "--format", "csv",
    ]));
    assert_eq!(
        csv.lines().next(),
        Some("family,k,n,value,baseline,margin,strict")
    );
    assert_eq!(csv.lines().nth(1), Some("F5,1,0,0,0,0,false"));
}

#[test]
fn suite_writes_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "suite",
        "--order",
        "40",
        "--k-max",
        "3",
        "--n-max",
        "200",
        "--out-dir",
        d,
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let first = std::fs::read(dir.path().join("suite-report.json")).unwrap();
    assert_eq!(run(&args).status.code(), Some(0));
    let second = std::fs::read(dir.path().join("suite-report.json")).unwrap();
    assert_eq!(first, second);
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v.get("timings").is_none());

    let timed = run(&["suite", "--order", "0", "--format", "json", "--timings"]);
    let v: Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(v["timings"].is_array());
}

#[test]
fn suite_order_zero_and_negative_control() {
    assert_eq!(run(&["suite", "--order", "0"]).status.code(), Some(0));
    assert_eq!(
        run(&["suite", "--order", "30", "--negative-control"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn thread_setting() {
    let o = Command::new(env!("CARGO_BIN_EXE_theta-trunc"))
        .args(["compute", "p", "--n-max", "3"])
        .env("THETA_TRUNC_THREADS", "two")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(run(&["--threads", "2", "compute", "p", "--n-max", "3"])
        .status
        .success());
}
