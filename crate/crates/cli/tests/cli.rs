use std::process::{Command, Output};

fn foliage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foliage"))
        .args(args)
        .env_clear()
        .output()
        .expect("run foliage")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = foliage(&a);
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn chi_sections() {
    assert_eq!(
        json(&["chi", "-n", "3", "-D", "2,2"])["chi_sections"],
        serde_json::json!(["0", "4"])
    );
    assert_eq!(
        json(&["chi", "-n", "3", "-D", "2"])["chi_sections"],
        serde_json::json!(["4", "2", "2"])
    );
    assert_eq!(json(&["chi", "-n", "3", "-D", "3", "-q", "1"])["chi"], "0");
}

#[test]
fn validation_exit_code() {
    assert_eq!(
        foliage(&["chi", "-n", "3", "-D", "2,2,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        foliage(&["count", "-n", "3", "-D", "2,2", "-d", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        foliage(&["bound", "-n", "3", "-D", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        foliage(&["verify-example", "1", "--ell", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(foliage(&["chi", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn count_agrees() {
    let out = foliage(&[
        "count", "-n", "3", "-D", "2,2", "-d", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["wronski"], "4");
    assert_eq!(v["euler"], "4");
    assert_eq!(v["chern"], "4");
    assert_eq!(v["agree"], true);
}

#[test]
fn bound_report() {
    let v = json(&["bound", "-n", "3", "-D", "2,2", "-d", "2"]);
    assert_eq!(v["alpha"], "2");
    assert_eq!(v["beta"], "2");
    assert_eq!(v["min_degree"], 2);
    assert_eq!(v["feasibility"]["curve_degree_bound"], "4");
    let v = json(&["bound", "-n", "5", "-D", "2"]);
    assert_eq!(v["beta_skipped"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["min_degree"], serde_json::Value::Null);
}

#[test]
fn polar_routes() {
    let v = json(&["polar", "-n", "4", "-D", "3"]);
    assert_eq!(
        v["polar_wronski"],
        serde_json::json!(["3", "6", "12", "24"])
    );
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_example_one() {
    let out = foliage(&["verify-example", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["formula_count"], "3");
    assert_eq!(v["certificate"], serde_json::json!([["3 * z2^2"]]));
}

#[test]
fn verify_example_two_reports_nodes() {
    let out = foliage(&["verify-example", "2", "--format", "json"]);
    // V(Q1, Q2) is a cycle of four lines, so the count differs from the
    // smooth-case formula and the run is flagged as a mismatch
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["formula_count"], "4");
    assert_eq!(v["smooth_count"], 4);
    assert_eq!(v["count"], 8);
}

#[test]
fn json_is_byte_identical() {
    let a = foliage(&["verify-example", "2", "--format", "json", "--seed", "0"]);
    let b = foliage(&["verify-example", "2", "--format", "json", "--seed", "0"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_foliage"))
        .args(["count", "-d", "2"])
        .env_clear()
        .env("FOLIAGE_N", "2")
        .env("FOLIAGE_DEGREES", "3")
        .env("FOLIAGE_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["wronski"], "3");
}

#[test]
fn verify_file_and_output_path() {
    let dir = std::env::temp_dir().join(format!("foliage-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("quartic.txt");
    std::fs::write(
        &input,
        "[field]\nz1*z2^3\nz2^4 + 1\n[variety]\nz1^4 + z2^4 + 1\n",
    )
    .unwrap();
    let report = dir.join("report.json");
    let out = foliage(&[
        "verify-file",
        input.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["d"], 3);
    assert_eq!(v["count"], 4);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "[field]\nz1 +* z2\nz2\n").unwrap();
    assert_eq!(
        foliage(&["verify-file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn identities_pass() {
    let out = foliage(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
}
