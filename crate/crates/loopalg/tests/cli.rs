use std::process::{Command, Output};

fn loopalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopalg")).args(args).env_remove("LOOPALG_MAX_DEGREE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn circle_delta() {
    let o = loopalg(&["delta", "Circle_Z", "x^3 (x) a"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "3*x^3 (x) 1");
    let o = loopalg(&["delta", "Circle_Z", "x^-2 (x) a"]);
    assert_eq!(stdout(&o).trim(), "-2*xinv^2 (x) 1");
}

#[test]
fn both_paths_agree_on_so5() {
    let o = loopalg(&["delta", "SO_odd_Q(2)", "alpha1 (x) beta3", "--path", "both"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "alpha0 (x) 1");
}

#[test]
fn rp3_delta_and_refused_derivation_path() {
    let o = loopalg(&["delta", "RP3_Z", "u^2*v (x) a"]);
    assert_eq!(stdout(&o).trim(), "4*u*v (x) 1 + u^2*v (x) b");
    let o = loopalg(&["delta", "RP3_Z", "u (x) a", "--path", "deriv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("derivation path unavailable"));
}

#[test]
fn loop_product() {
    let o = loopalg(&["mul", "Circle_Z", "x (x) 1", "x (x) a"]);
    assert_eq!(stdout(&o).trim(), "x^2 (x) a");
}

#[test]
fn parse_errors_carry_positions() {
    let o = loopalg(&["delta", "Circle_Z", "x^3 (x) (a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at 10..10"), "{}", stderr(&o));
    let o = loopalg(&["delta", "Circle_Z", "y (x) a"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_json() {
    let o = loopalg(&["verify", "S3_Z", "--cases", "50"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = report.as_array().unwrap();
    assert!(checks.len() >= 10);
    for c in checks {
        assert!(c["failures"].as_array().unwrap().is_empty(), "{}", c);
    }
}

#[test]
fn windows_are_capped() {
    let o = loopalg(&["hilbert", "S3_Z", "--side", "loop", "--window", "-100:3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degree limit 64"));
    let o = Command::new(env!("CARGO_BIN_EXE_loopalg"))
        .args(["hilbert", "S3_Z", "--side", "loop", "--window", "-100:-99"])
        .env("LOOPALG_MAX_DEGREE", "200")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    let o = loopalg(&["hilbert", "S3_Z", "--side", "loop", "--window", "3:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hilbert_with_oracle() {
    let o = loopalg(&["hilbert", "SO_odd_Q(1)", "--side", "omega", "--window", "0:4", "--oracle"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0\t2\t2\n1\t0\t0\n2\t2\t2\n3\t0\t0\n4\t2\t2\n");
    let o = loopalg(&["--json", "hilbert", "SO_odd_Q(1)", "--side", "loop", "--window", "-3:0", "--oracle"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
    let o = loopalg(&["hilbert", "S3_Z", "--side", "base", "--window", "-3:0", "--oracle"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_then_reload() {
    let dir = std::env::temp_dir().join(format!("loopalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("rp3.json");
    let path = file.to_str().unwrap();
    assert!(loopalg(&["export", "RP3_Z", "--out", path]).status.success());
    let direct = loopalg(&["delta", "RP3_Z", "u^3*v (x) a"]);
    let reloaded = loopalg(&["delta", path, "u^3*v (x) a"]);
    assert!(reloaded.status.success(), "{}", stderr(&reloaded));
    assert_eq!(stdout(&direct), stdout(&reloaded));
    assert!(loopalg(&["show", path]).status.success());
    let o = loopalg(&["golden", path]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn golden_and_show() {
    let o = loopalg(&["golden", "S3_Z"]);
    let g: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["model"], "S3_Z");
    assert!(!g["rows"].as_array().unwrap().is_empty());
    let o = loopalg(&["show", "RP3_Z"]);
    assert!(stdout(&o).contains("D(v) = v (x) v"));
    let o = loopalg(&["show", "Nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown model"));
}
