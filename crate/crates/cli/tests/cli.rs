use std::process::{Command, Output};

use qracah::VerificationReport;
use qracah_cli::{emit_report, run_cli, Format};

fn qracah(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qracah")).args(args).output().unwrap()
}

const BASE: [&str; 10] = ["--q", "2", "--a", "3", "--b", "5", "--c", "7", "--d", "2"];

#[test]
fn verify_json_passes() {
    let mut args = vec!["--field", "rational", "--mode", "verify", "--format", "json"];
    args.extend(BASE);
    let out = qracah(&args);
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.params.field, "rational");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"fail\": 0"));
    assert!(text.contains("\"paper_ref\""));
}

#[test]
fn json_round_trip() {
    let out = qracah(&[
        "--q", "2", "--a", "3/2", "--b", "5", "--c", "7", "--d", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.params.a, "3/2");
    assert_eq!(emit_report(&report, Format::Json), out.stdout);
}

#[test]
fn validation_errors_exit_two_with_clause() {
    let out = qracah(&[
        "--field", "rational", "--q", "1", "--a", "3", "--b", "5", "--c", "7", "--d", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("assumption violated: q^4 = 1"));
    let out = qracah(&["--q", "2", "--a", "2", "--b", "5", "--c", "7", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("clause (ii)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run_cli(["--q", "2"]), 2);
    assert_eq!(run_cli(["--d", "2", "--q", "x", "--a", "3", "--b", "5", "--c", "7"]), 2);
    assert_eq!(run_cli(["--d", "2", "--bogus"]), 2);
    assert_eq!(run_cli(["--field", "fp:9", "--d", "2", "--mode", "sample"]), 2);
    assert_eq!(run_cli(["--field", "rational", "--d", "2", "--mode", "sample"]), 2);
    assert_eq!(
        run_cli(["--field", "fp:101", "--d", "2", "--mode", "sample", "--trials", "0"]),
        2
    );
    assert_eq!(run_cli(["--d", "2", "--mode", "verify", "--q", "2"]), 2);
}

#[test]
fn sample_mode_reports_every_trial() {
    let out = qracah(&[
        "--field",
        "fp:1000003",
        "--d",
        "4",
        "--mode",
        "sample",
        "--trials",
        "50",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 50);
    assert!(reports.iter().all(|r| r.all_passed() && r.params.field == "fp:1000003"));
}

#[test]
fn sweep_covers_permutations_and_inversions() {
    let out = qracah(&[
        "--field", "fp:10007", "--d", "3", "--mode", "sweep", "--seed", "3", "--format", "json", "--checks", "prod.*",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 24);
    assert!(reports
        .iter()
        .all(|r| r.checks.iter().all(|c| c.id.starts_with("prod."))));
}

#[test]
fn glob_filter_and_text_table() {
    let mut args = vec!["--checks", "conj.table1.*", "--basis", "second"];
    args.extend(BASE);
    let out = qracah(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "field rational  q 2  a 3  b 5  c 7  d 2  basis second");
    assert!(lines[1].starts_with("ID "));
    assert_eq!(lines.len(), 2 + 18 + 1);
    assert!(lines[2..20]
        .iter()
        .all(|l| l.starts_with("conj.table1.") && l.contains(" pass")));
    assert_eq!(lines[20], "pass 18  fail 0  skipped 0");
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("qracah-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let mut args = vec!["--format", "json", "--out", path.to_str().unwrap()];
    args.extend(BASE);
    let out = qracah(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: VerificationReport = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert!(report.all_passed());
    std::fs::remove_dir_all(&dir).unwrap();
}
