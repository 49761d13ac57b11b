//! End-to-end checks of the binary: exit-code contract, output shapes, and
//! the documented examples.

use std::process::{Command, Output};

fn parabound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parabound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const BASIC: &str = r#"{"context": {"genus": 2, "rank": 2, "degree": 0,
    "fixed_determinant": false, "three_rational_points": true}}"#;

#[test]
fn bounds_reports_the_headline_sandwich() {
    let out = parabound(&["bounds", "--json", BASIC, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = report["entries"].as_array().unwrap();
    let intro_lower = entries
        .iter()
        .find(|e| e["theorem"] == "intro-1" && e["kind"] == "lower")
        .expect("lower entry present");
    assert_eq!(intro_lower["value"], "6");
    assert_eq!(intro_lower["locus"], "full");
    let intro_upper = entries
        .iter()
        .find(|e| e["theorem"] == "intro-1" && e["kind"] == "upper")
        .expect("upper entry present");
    assert_eq!(intro_upper["value"], "8");
}

#[test]
fn malformed_json_exits_one() {
    let out = parabound(&["bounds", "--json", "{not json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("malformed"));

    // missing required context field
    let out = parabound(&["bounds", "--json", r#"{"context": {"rank": 2}}"#]);
    assert_eq!(out.status.code(), Some(1));

    let out = parabound(&["bounds", "--input", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_datum_exits_two_and_names_the_clause() {
    let doc = r#"{"context": {"genus": 2, "rank": 2, "degree": 0,
        "fixed_determinant": false, "three_rational_points": true},
        "datum": {"points": [
            {"label": "a", "multiplicities": [1, 1], "weights": ["0", "1/2"]},
            {"label": "a", "multiplicities": [2], "weights": ["0"]}
        ]}}"#;
    let out = parabound(&["bounds", "--json", doc]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("duplicate point label"));
}

#[test]
fn verify_single_pair_matches_documented_count() {
    let out = parabound(&["verify", "--suite", "vstable", "--r", "4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("vstable(r=4,q=3): pass (212 subspaces"));
}

#[test]
fn verify_remaining_suites_run_clean() {
    let out = parabound(&["verify", "--suite", "fg", "--rmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fg(rmax=8): pass"));

    let out = parabound(&["verify", "--suite", "flags"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("flags(samples=10000): pass"));

    let out = parabound(&["verify", "--suite", "isotropy"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("isotropy(|G|=12,N=12): pass"));
    assert!(text.contains("isotropy: pass"));
}

#[test]
fn verify_cap_exceeded_exits_three() {
    let out = parabound(&["verify", "--suite", "vstable", "--r", "40", "--q", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn verify_rejects_non_prime_field() {
    let out = parabound(&["verify", "--suite", "vstable", "--r", "3", "--q", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("prime"));
}

#[test]
fn table_matches_documented_row_and_validates_ranges() {
    let out = parabound(&["table", "--g-range", "2..2", "--r-range", "2..2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("g,r,new_upper,legacy_upper,lower,margin\n"));
    assert!(text.contains("2,2,8,16,6,8"));

    // r = 1: both uppers at least g, lower column empty
    let out = parabound(&["table", "--g-range", "2..2", "--r-range", "1..1"]);
    assert!(stdout(&out).contains("2,1,2,3,,1"));

    let out = parabound(&["table", "--g-range", "1..2", "--r-range", "2..3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = parabound(&["table", "--g-range", "2..3", "--r-range", "0..3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = parabound(&["table", "--g-range", "3..2", "--r-range", "1..3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = parabound(&["table", "--g-range", "nope", "--r-range", "1..3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = parabound(&["table", "--g-range", "2..3", "--r-range", "1..5000"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn new_upper_never_exceeds_legacy_on_grid() {
    let out = parabound(&["table", "--g-range", "2..4", "--r-range", "2..8"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let new: i64 = fields[2].parse().unwrap();
        let legacy: i64 = fields[3].parse().unwrap();
        assert!(new <= legacy, "row {line}");
    }
}

#[test]
fn missing_input_source_is_a_parse_error() {
    let out = parabound(&["bounds"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_report_round_trips_through_core_types() {
    let out = parabound(&["bounds", "--json", BASIC, "--format", "json"]);
    let report: parabound_core::BoundReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.context.genus, 2);
    let again = serde_json::to_string_pretty(&report).unwrap();
    let reparsed: parabound_core::BoundReport = serde_json::from_str(&again).unwrap();
    assert_eq!(reparsed, report);
}
