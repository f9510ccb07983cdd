use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use algebroid::definition::{parse_definition, Definition, LoadOptions};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_algebroid"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_records(out: &Output) -> Vec<Value> {
    match serde_json::from_slice(&out.stdout).expect("JSON report") {
        Value::Array(v) => v,
        other => panic!("expected an array, got {other}"),
    }
}

fn export(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let out = run(&["catalog", "export", name, "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn verify_all_on_c2_passes_every_clause() {
    let dir = TempDir::new().unwrap();
    let file = export(&dir, "c2");
    let out = run(&["--json", "verify", "all", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let records = json_records(&out);
    assert!(records.len() > 100);
    for r in &records {
        assert_eq!(r["status"], "PASS", "{r}");
        for key in ["claim", "clause", "witnesses", "timing"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
    }
}

#[test]
fn antipodes_skipped_for_h4() {
    let out = run(&["--json", "verify", "remark26", fixture("h4-module.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let records = json_records(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["status"], "SKIPPED");
    assert_eq!(records[0]["note"], "not involutive");
}

#[test]
fn corrupted_action_exits_one_with_witness() {
    let file = fixture("c2-bad-action.json");
    let out = run(&["verify", "thm25", file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("witness(es)"));

    let out = run(&["--skip-validate", "verify", "thm25", file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[FAIL]") && text.contains("witness(es)"), "{text}");
}

#[test]
fn corrupted_antipode_fails_check() {
    let out = run(&["check", "hopf", fixture("h4-bad-antipode.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("[FAIL] antipode"));
    let out = run(&["check", "hopf", fixture("h4.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let file = export(&dir, "kc2");
    let path = file.to_str().unwrap();
    assert_eq!(code(&run(&["--field", "fp:8", "check", "hopf", path])), 2);
    assert_eq!(code(&run(&["verify", "thm99", path])), 2);
    assert_eq!(code(&run(&["verify", "thm25", path])), 2);
    assert_eq!(code(&run(&["verify", "all", "/nonexistent/file.json"])), 2);

    let text = std::fs::read_to_string(&file).unwrap().replace("\"q\"", "\"fp:9\"");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, text).unwrap();
    let out = run(&["check", "hopf", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
}

#[test]
fn reports_are_byte_identical() {
    let file = fixture("h4-module.json");
    let a = run(&["--json", "verify", "cor24", file.to_str().unwrap()]);
    let b = run(&["--json", "verify", "cor24", file.to_str().unwrap()]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(json_records(&a).iter().all(|r| r["timing"].is_null()));

    let timed = run(&["--json", "--timing", "verify", "cor24", file.to_str().unwrap()]);
    assert!(json_records(&timed).iter().any(|r| r["timing"].is_number()));
}

#[test]
fn export_round_trips_through_the_library() {
    let dir = TempDir::new().unwrap();
    let file = export(&dir, "kc2");
    let expected =
        algebroid::catalog::group_algebra(algebroid::FieldSpec::Rationals, &algebroid::catalog::Group::cyclic(2));
    match parse_definition(&file, LoadOptions::default()).unwrap() {
        Definition::Hopf(h) => assert_eq!(h, expected),
        other => panic!("unexpected {}", other.kind()),
    }
}

#[test]
fn build_writes_product_tables() {
    let dir = TempDir::new().unwrap();
    for (kind, dim) in [("lr-smash", 16), ("diagonal", 16), ("diamond", 16), ("odot", 16)] {
        let out_path = dir.path().join(format!("{kind}.json"));
        let out = run(&["build", kind, fixture("h4-module.json").to_str().unwrap(), "-o", out_path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let check = run(&["--json", "verify", "all", out_path.to_str().unwrap()]);
        assert_eq!(code(&check), 0);
        match parse_definition(&out_path, LoadOptions::default()).unwrap() {
            Definition::Algebra(a) => assert_eq!(a.dim(), dim),
            other => panic!("unexpected {}", other.kind()),
        }
    }
    let out = run(&["build", "diamond", fixture("h4.json").to_str().unwrap(), "-o", "/dev/null"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn field_override_and_prime_field_runs() {
    let file = fixture("c2-translation.json");
    let q = json_records(&run(&["--json", "verify", "prop21", file.to_str().unwrap()]));
    let f7 = json_records(&run(&["--json", "--field", "fp:7", "verify", "prop21", file.to_str().unwrap()]));
    assert_eq!(q, f7);
}

#[test]
fn dual_bialgebroid_on_hopf_file() {
    let out = run(&["--json", "verify", "ex27", fixture("kc2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let records = json_records(&out);
    assert!(records.iter().any(|r| r["clause"] == "dim Z = dim(H)^4" && r["status"] == "PASS"));
}

#[test]
fn catalog_list_names_instances() {
    let out = run(&["catalog", "list"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["trivial", "c2", "s3", "h4", "s3-sign", "kc2", "h4-dual"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{name}\t"))), "{text}");
    }
}
