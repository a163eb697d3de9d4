//! End-to-end runs of the `iyang` binary against checked-in reports.
//!
//! Set `IYANG_BLESS=1` to rewrite the golden files from the current binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iyang"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("binary runs")
}

fn case_args<'a>(sub: &'a str, cases: &[&str], extra: &[&'a str]) -> Vec<String> {
    let mut v = vec![sub.to_string()];
    for c in cases {
        v.push("--case".into());
        v.push(format!("cases/{}.json", c));
    }
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

fn check_golden(name: &str, sub: &str, cases: &[&str], extra: &[&str]) {
    let args = case_args(sub, cases, extra);
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = run(&refs);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path: PathBuf = root().join("tests/golden").join(format!("{}.json", name));
    if std::env::var_os("IYANG_BLESS").is_some() {
        fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = fs::read(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
    assert!(expected == out.stdout, "{} differs from the current output", path.display());
}

#[test]
fn islice_reports_match_golden() {
    check_golden("islice", "islice", &["islice_432", "pgl2_w6"], &[]);
}

#[test]
fn cone_quivers_match_golden() {
    let cones = ["cone_a3", "cone_a4", "cone_a5", "cone_a6", "cone_a7", "cone_a8"];
    check_golden("iquiverify_cones", "iquiverify", &cones, &["--both-signs", "--jobs", "4"]);
}

#[test]
fn igklo_a1_matches_golden() {
    check_golden("igklo_a1", "igklo-verify", &["a1_split"], &[]);
}

#[test]
fn classical_a1_matches_golden() {
    check_golden("classical_a1", "classical-verify", &["a1_split"], &[]);
}

#[test]
fn pbw_a2_matches_golden() {
    check_golden("pbw_a2", "pbw-count", &["pbw_a2"], &[]);
}

#[test]
fn middle_fixed_node_case_passes() {
    let out = run(&["igklo-verify", "--case", "cases/aiii3_middle.json", "--K", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pass"], true);
}

#[test]
fn malformed_tau_is_a_schema_error() {
    let out = run(&["igklo-verify", "--case", "cases/bad_tau.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let diag: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "schema");
}

#[test]
fn missing_case_file_is_reported() {
    let out = run(&["islice", "--case", "cases/does_not_exist.json"]);
    assert_eq!(out.status.code(), Some(2));
    let diag: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "io");
}

#[test]
fn failing_checks_exit_with_one() {
    let dir = std::env::temp_dir().join(format!("iyang-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let case = dir.join("violating.json");
    fs::write(&case, r#"{"diagram": {"kind": "A", "rank": 2}, "v": [1, 1], "w": [0, 0]}"#).unwrap();
    let out = run(&["iquiverify", "--case", case.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pass"], false);
    fs::remove_dir_all(Path::new(&dir)).unwrap();
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join(format!("iyang-out-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["islice", "--case", "cases/pgl2_w6.json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let stdout = run(&["islice", "--case", "cases/pgl2_w6.json"]).stdout;
    assert_eq!(fs::read(&path).unwrap(), stdout);
    fs::remove_dir_all(&dir).unwrap();
}
