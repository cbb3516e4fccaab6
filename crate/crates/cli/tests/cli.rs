use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperderiv"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json");
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&doc).expect("schema compiles")
}

#[test]
fn genus_one_report_validates_and_passes() {
    let (code, out, _) = run(&["verify", "--genus", "1", "--report", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    let s = schema();
    if let Err(errors) = s.validate(&report) {
        panic!("{:?}", errors.map(|e| e.to_string()).collect::<Vec<_>>());
    }
    let entries = report["entries"].as_array().unwrap();
    assert!(entries.len() >= 12);
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted, "entries are sorted by id and unique");
}

#[test]
fn pit_report_for_two_genera_validates() {
    let (code, out, _) = run(&["verify", "--genus", "2", "--mode", "pit", "--seed", "5", "--report", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(schema().is_valid(&report));
    assert_eq!(report["pit"]["seed"], 5);
}

#[test]
fn schema_rejects_fail_without_residual() {
    let bad = serde_json::json!({
        "schema_version": "1", "genus": 1, "mode": "exact",
        "entries": [{"id": "x", "anchor": "", "status": "fail", "checked": 1, "wall_time": 0.0}]
    });
    assert!(!schema().is_valid(&bad));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify", "--genus", "4"]).0, 2);
    assert_eq!(run(&["verify", "--genus", "1", "--mode", "pit", "--samples", "0"]).0, 2);
    assert_eq!(run(&["verify", "--genus", "1", "--mode", "pit", "--bound", "1"]).0, 2);
    assert_eq!(run(&["export", "--what", "tables", "--genus", "1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn text_report_lists_every_entry() {
    let (code, out, _) = run(&["verify", "--genus", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS detT_eq_c_R"));
    assert!(out.contains("0 failed"));
}

#[test]
fn exports_are_deterministic() {
    for what in ["fields", "map", "brackets", "matrices"] {
        for format in ["json", "latex"] {
            let args = ["export", "--what", what, "--genus", "2", "--format", format];
            let (code, a, _) = run(&args);
            assert_eq!(code, 0);
            assert_eq!(a, run(&args).1, "{what} {format}");
        }
    }
}

#[test]
fn map_export_has_four_components() {
    let (_, out, _) = run(&["export", "--what", "map", "--genus", "2", "--format", "latex"]);
    for s in ["4", "6", "8", "10"] {
        assert!(out.contains(&format!("\\lambda_{{{s}}} &=")), "{out}");
    }
    let (_, out, _) = run(&["export", "--what", "matrices", "--genus", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["T"].as_array().unwrap().len(), 6);
    assert_eq!(doc["M"].as_array().unwrap().len(), 10);
}
