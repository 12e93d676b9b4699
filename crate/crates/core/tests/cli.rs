use std::path::Path;
use std::process::{Command, Output};

fn qfermion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfermion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn assert_golden(args: &[&str], name: &str, code: i32) {
    let first = qfermion(args);
    let second = qfermion(args);
    assert_eq!(
        first.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
    assert_eq!(
        String::from_utf8(first.stdout).unwrap(),
        golden(name),
        "{args:?}"
    );
}

#[test]
fn numbers_golden() {
    assert_golden(
        &["numbers", "--n-max", "4", "--q", "2"],
        "numbers_q2.csv",
        0,
    );
    assert_golden(
        &["numbers", "--n-max", "3", "--q", "1"],
        "numbers_q1.csv",
        0,
    );
}

#[test]
fn numbers_rows() {
    let out = String::from_utf8(qfermion(&["numbers", "--n-max", "4", "--q", "2"]).stdout).unwrap();
    let last = out.lines().last().unwrap();
    let cols: Vec<&str> = last.split(',').collect();
    assert_eq!(cols[0], "4");
    assert_eq!(cols[1].parse::<f64>().unwrap(), -6.375);

    let out = String::from_utf8(qfermion(&["numbers", "--n-max", "3", "--q", "1"]).stdout).unwrap();
    let brackets: Vec<f64> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(brackets, vec![0.0, 1.0, 0.0, 1.0]);

    let out =
        String::from_utf8(qfermion(&["numbers", "--n-max", "1", "--q", "9.9"]).stdout).unwrap();
    let brackets: Vec<f64> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(brackets, vec![0.0, 1.0]);
}

#[test]
fn sweep_golden() {
    assert_golden(
        &[
            "sweep",
            "--q-list",
            "0.5,1,2",
            "--x-list",
            "2",
            "--quantities",
            "f_naive_closed,f_corrected,partition",
            "--n-max",
            "20",
        ],
        "sweep.csv",
        0,
    );
    assert_golden(
        &[
            "sweep",
            "--q-list",
            "0.5,2",
            "--x",
            "2",
            "--quantities",
            "f_naive_closed,f_naive_series",
            "--n-max",
            "10",
            "--format",
            "json",
        ],
        "sweep.json",
        0,
    );
}

#[test]
fn sweep_cells() {
    let out = qfermion(&[
        "sweep",
        "--q-list",
        "0.5,2,1",
        "--x",
        "2",
        "--quantities",
        "f_naive_closed",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    let a: f64 = values[0].parse().unwrap();
    let b: f64 = values[1].parse().unwrap();
    assert!((b - 0.253_864_718_7).abs() < 1e-10);
    assert!((a + b).abs() <= 1e-13);
    assert_eq!(values[2], "POLE_AT_Q_ONE");
}

#[test]
fn sweep_json_parses() {
    let out = qfermion(&["sweep", "--q", "2", "--x-list", "1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records
        .iter()
        .all(|r| r.get("quantity").is_some() && r.get("value").is_some()));
}

#[test]
fn verify_golden_and_status() {
    assert_golden(&["verify", "--suite", "all"], "verify_all.txt", 0);
    assert_golden(
        &["verify", "--suite", "algebra", "--q", "1", "--dim", "2"],
        "verify_algebra_classical.txt",
        0,
    );
    let text = golden("verify_all.txt");
    assert!(text.contains("closed form vs geometric series: max rel err"));
    assert!(text.contains("corrected distribution vs classical"));
    assert!(text.contains("classical fermion relations exact: 0.000e0 <= 0e0: PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_failure_exits_one() {
    let out = qfermion(&["verify", "--suite", "algebra", "--q", "1.05", "--dim", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("NEGATIVE_BASIC_NUMBER"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["numbers", "--q", "abc"][..],
        &["numbers", "--q", "-1"],
        &["frobnicate"],
        &["sweep", "--x", "1"],
        &["sweep", "--q", "2", "--x", "0"],
        &["sweep", "--q", "2", "--x", "1", "--format", "xml"],
        &["verify", "--suite", "everything"],
    ] {
        assert_eq!(qfermion(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qfermion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("numbers.csv");
    let out = qfermion(&[
        "numbers",
        "--n-max",
        "4",
        "--q",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("numbers_q2.csv")
    );
    std::fs::remove_dir_all(dir).unwrap();
}
