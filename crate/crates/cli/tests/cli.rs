use std::path::PathBuf;
use std::process::{Command, Output};

fn sylowcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylowcm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn fixture_file(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.gtab")).display().to_string()
}

#[test]
fn field_inspect() {
    let o = sylowcm(&["field", "inspect", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["kind"], "field");
    assert_eq!(v["field"]["degree"], 6);
    assert_eq!(v["rho_order"], 9);
    assert_eq!(v["fixed_field_size"], 8);
}

#[test]
fn verify_lemmas_psu3_two() {
    let o = sylowcm(&["verify", "lemmas", "--family", "psu3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["lemmas"]["maximal_elementary_abelian_count"], 1);
    assert_eq!(v["lemmas"]["unique_maximal_elementary_abelian_is_center"], true);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_lemmas_suzuki_reports_arithmetic() {
    let v = json(&sylowcm(&["verify", "lemmas", "--family", "sz", "--n", "1"]));
    assert_eq!(v["suzuki"]["theta"], 4);
    assert_eq!(v["suzuki"]["gcd"], 1);
    assert_eq!(v["lemmas"]["center_order"], 8);
}

#[test]
fn sylow_build_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sz1.gtab");
    let o = sylowcm(&["sylow", "build", "--family", "sz", "--n", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["order"], 64);
    let b = sylowcm(&["cohomology", "betti", "--group", out.to_str().unwrap(), "--max-degree", "3"]);
    assert_eq!(json(&b)["betti"], serde_json::json!([1, 3, 5, 9]));
}

#[test]
fn betti_from_shipped_fixture() {
    let o = sylowcm(&["cohomology", "betti", "--group", &fixture_file("d8"), "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["betti"], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn corrupted_group_file_exits_two_without_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gtab");
    let mut text = std::fs::read_to_string(fixture_file("q8")).unwrap();
    text = text.replacen("\n0 1 2 3", "\n0 0 2 3", 1);
    std::fs::write(&path, text).unwrap();
    let o = sylowcm(&["cohomology", "betti", "--group", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let missing = sylowcm(&["cohomology", "betti", "--group", "/nonexistent/x.gtab"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sylowcm(&["sylow", "build", "--family", "m11", "--n", "1"]).status.code(), Some(2));
    assert_eq!(sylowcm(&["sylow", "build", "--family", "psu3", "--n", "5"]).status.code(), Some(2));
    assert_eq!(sylowcm(&["sylow", "build", "--family", "sz", "--n", "2"]).status.code(), Some(2));
    assert_eq!(sylowcm(&["field", "inspect", "--n", "2", "--poly", "10001"]).status.code(), Some(2));
    assert_eq!(sylowcm(&["field", "inspect", "--n", "2", "--poly", "x^4"]).status.code(), Some(2));
    let o = sylowcm(&["cohomology", "cm-check", "--family", "fixture", "--n", "2", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sylowcm(&["cohomology", "cm-check", "--family", "fixture", "--fixture", "q8", "--max-degree", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn polynomial_override() {
    let o = sylowcm(&["field", "inspect", "--n", "2", "--poly", "11001"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["field"]["polynomial"], "11001");
    let l = sylowcm(&["verify", "lemmas", "--family", "psu3", "--n", "2", "--poly", "11001"]);
    assert_eq!(l.status.code(), Some(0));
}

#[test]
fn cm_check_report_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    let args = ["cohomology", "cm-check", "--family", "fixture", "--fixture", "q8", "--max-degree", "8"];
    let mut with_file = args.to_vec();
    with_file.extend(["--report", path.to_str().unwrap()]);
    let a = sylowcm(&with_file);
    let b = sylowcm(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&a));
    assert_eq!(json(&a)["verdict"], "CM-certified-to-degree-8");
}

#[test]
fn cm_check_families() {
    let o = sylowcm(&["cohomology", "cm-check", "--family", "sz", "--n", "1", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "CM-certified-to-degree-8");
    assert_eq!(v["center_rank"], 3);
    let d8 = sylowcm(&["cohomology", "cm-check", "--family", "fixture", "--fixture", "d8", "--max-degree", "4"]);
    assert_eq!(d8.status.code(), Some(0));
    assert_eq!(json(&d8)["verdict"], "not-certified");
}

#[test]
fn timings_are_opt_in() {
    let base = ["cohomology", "cm-check", "--family", "fixture", "--fixture", "z2", "--max-degree", "3"];
    assert!(json(&sylowcm(&base)).get("timings").is_none());
    let mut timed = base.to_vec();
    timed.push("--timings");
    let v = json(&sylowcm(&timed));
    assert_eq!(v["timings"][0]["stage"], "build");
}

#[test]
fn fixtures_list() {
    let o = sylowcm(&["fixtures", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("sd16\t16\t"));
}
