use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn solvdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvdeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/report.schema.json");
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(report: &Value) {
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

#[test]
fn ssearch_pgammal2_8_prints_168() {
    let o = solvdeg(&["ssearch", "--group", "pgammal2:8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("S(G) = 168\n"), "{}", stdout(&o));
}

#[test]
fn ssearch_json_and_witness_order() {
    let o = solvdeg(&["ssearch", "--group", "sym:4", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["s_value"], 24);
    assert_eq!(v["budget_hit"], false);
    let witness = v["witness"].as_array().unwrap();
    assert!(!witness.is_empty());
}

#[test]
fn color_sym4_meets_bound() {
    let o = solvdeg(&["color", "--group", "sym:4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let j = v["preserver_order"].as_u64().unwrap();
    assert!(j * j <= 24);
    assert_eq!(v["colors"].as_array().unwrap().len(), 1);
    assert!(v["exponent_pairs"][0]["twos"].is_u64());
}

#[test]
fn color2_matches_targets() {
    let o = solvdeg(&["color2", "--group", "wreath(cyclic:2,cyclic:4)", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matches_targets"], true);
    assert_eq!(v["preserver_order"], serde_json::json!([1, 1, 1]));
}

#[test]
fn generator_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.txt");
    std::fs::write(&path, "# dihedral group of the square\n4\n1 2 3 0\n0 3 2 1  # reflection\n").unwrap();
    let spec = format!("file:{}", path.display());
    let o = solvdeg(&["ssearch", "--group", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("S(G) = 8\n"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(solvdeg(&["ssearch", "--group", "psl2:6"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["ssearch", "--group", "nonsense"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["color", "--group", "file:/does/not/exist"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["verify"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["verify", "--all", "--qmax", "3"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["verify", "--family", "E9"]).status.code(), Some(2));
    assert_eq!(solvdeg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_1() {
    let o = solvdeg(&["verify", "--family", "psl2", "--qmax", "64", "--exponent", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status: Fail"));
}

#[test]
fn undecidable_exits_3() {
    // one bit of working precision cannot separate every sporadic margin
    let o = solvdeg(&["verify", "--family", "sporadic", "--precision-cap", "1"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn family_report_validates_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let json = dir.path().join(format!("r{jobs}.json"));
        let md = dir.path().join(format!("r{jobs}.md"));
        let o = solvdeg(&[
            "--jobs",
            jobs,
            "verify",
            "--family",
            "PSU",
            "--qmax",
            "128",
            "--nmax",
            "7",
            "--json",
            json.to_str().unwrap(),
            "--markdown",
            md.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        outputs.push((std::fs::read(&json).unwrap(), std::fs::read(&md).unwrap(), o.stdout));
    }
    assert_eq!(outputs[0], outputs[1]);
    let v: Value = serde_json::from_slice(&outputs[0].0).unwrap();
    assert_valid(&v);
    let r = &v["reports"][0];
    assert_eq!(r["family"], "PSU");
    assert_eq!(r["swept"], serde_json::json!([2, 128]));
    assert_eq!(r["tail"]["certified"], true);
}

#[test]
fn verify_all_small_sweep_passes_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("all.json");
    let o = solvdeg(&["verify", "--all", "--qmax", "256", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_valid(&v);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["all_tails_certified"], true);
    let psl2 = v["reports"].as_array().unwrap().iter().find(|r| r["family"] == "psl2").unwrap();
    let equal: Vec<&Value> = psl2["verdicts"].as_array().unwrap().iter().filter(|e| e["verdict"] == "equal").collect();
    assert_eq!(equal.len(), 1);
    assert_eq!(equal[0]["q"], 8);
}

#[test]
fn failing_report_still_validates() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("bad.json");
    let o = solvdeg(&["verify", "--family", "psln", "--qmax", "32", "--exponent", "2", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_valid(&v);
    assert_eq!(v["status"], "fail");
}

#[test]
fn tables_lists_locations() {
    let o = solvdeg(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("M11"));
    assert!(text.contains("sporadic groups table, row M11"));
    let raw = solvdeg(&["tables", "--json"]);
    let v: Value = serde_json::from_slice(&raw.stdout).unwrap();
    assert_eq!(v["sporadic"].as_array().unwrap().len(), 26);
}

#[test]
fn selftest_passes() {
    let o = solvdeg(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn search_and_coloring_output_ignores_thread_count() {
    for args in [
        ["ssearch", "--group", "pgammal2:9", "--json"],
        ["color", "--group", "wreath(sym:3,sym:3)", "--json"],
    ] {
        let one = solvdeg(&[&["--jobs", "1"][..], &args[..]].concat());
        let many = solvdeg(&[&["--jobs", "6"][..], &args[..]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout);
    }
}
