use std::path::PathBuf;
use std::process::{Command, Output};

use qschroder::verify::FullReport;

fn qschroder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschroder"))
        .args(args)
        .env_remove("QSCHRODER_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("UTF-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn large_schroder_numbers() {
    let out = qschroder(&["seq", "--family", "schroder-large", "--n", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1 2 6 22 90");
}

#[test]
fn little_schroder_triangle_last_row() {
    let out = qschroder(&["triangle", "--family", "little-schroder", "--rows", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let last: Vec<&str> = text.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(last, ["11", "17", "7", "1"]);
}

#[test]
fn q_equal_one_recovers_classical_family() {
    let q = qschroder(&["seq", "--family", "q-schroder-like", "--n", "6", "--q", "1", "--format", "json"]);
    let classical = qschroder(&["seq", "--family", "schroder-like", "--n", "6", "--format", "json"]);
    let terms = |o: &Output| serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["terms"].clone();
    assert_eq!(terms(&q), terms(&classical));
}

#[test]
fn classical_suite_passes() {
    let out = qschroder(&["verify", "--suite", "classical"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("suite classical seed 42"));
}

#[test]
fn full_suite_is_deterministic_and_round_trips() {
    let args = ["verify", "--suite", "all", "--seed", "42", "--format", "json"];
    let first = qschroder(&args);
    let second = qschroder(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let report: FullReport = serde_json::from_slice(&first.stdout).unwrap();
    let mut again = serde_json::to_string_pretty(&report).unwrap();
    again.push('\n');
    assert_eq!(again.as_bytes(), first.stdout.as_slice());
}

#[test]
fn csv_has_the_documented_columns() {
    let out = qschroder(&["hankel", "--identity", "schroder-like/D0", "--mode", "random", "--max-n", "3", "--points", "4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("identity,n,mode,match"));
    assert_eq!(lines.collect::<Vec<_>>(), [
        "schroder-like/D0,1,specialized,true",
        "schroder-like/D0,2,specialized,true",
        "schroder-like/D0,3,specialized,true",
    ]);
}

#[test]
fn hankel_json_has_the_report_fields() {
    let out = qschroder(&["hankel", "--family", "little-schroder", "--offset", "1", "--max-n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for field in ["identity", "n", "mode", "match", "computed", "closed_form"] {
        assert!(v[0].get(field).is_some(), "missing {field}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&qschroder(&["seq", "--family", "no-such-family", "--n", "3"])), 2);
    assert_eq!(code(&qschroder(&["seq", "--family", "catalan", "--x", "3/"])), 2);
    assert_eq!(code(&qschroder(&["seq", "--family", "catalan", "--n", "-1"])), 2);
    assert_eq!(code(&qschroder(&["verify", "--suite", "everything"])), 2);
}

#[test]
fn caps_exit_three() {
    let path: PathBuf = std::env::temp_dir().join(format!("qschroder-caps-{}.toml", std::process::id()));
    std::fs::write(&path, "max_path_n = 3\nmax_symbolic_n = 2\n").unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_qschroder"))
            .args(args)
            .env("QSCHRODER_CONFIG", &path)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run(&["paths", "--model", "schroder", "--n", "4"])), 3);
    assert_eq!(code(&run(&["hankel", "--family", "catalan", "--max-n", "3"])), 3);
    assert_eq!(code(&run(&["paths", "--model", "schroder", "--n", "3"])), 0);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn path_oracles_agree_with_formulas() {
    let out = qschroder(&["paths", "--model", "motzkin", "--n", "6", "--k", "2", "--family", "schroder-like", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["agrees"], true);
    assert_eq!(v["paths"], v["expected"]);
}

#[test]
fn falsified_printed_data_still_exits_zero() {
    let out = qschroder(&["stieltjes", "--family", "b-family", "--depth", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "printed-form-falsified");
}
