use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str], file: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_darboux"))
        .args(args)
        .arg(file)
        .output()
        .unwrap()
}

fn json(cmd: &str, name: &str) -> Value {
    let out = run(&[cmd, "--json"], &fixture(name));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_system(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn malformed_input_reports_position() {
    let out = run(&["analyze"], &fixture("malformed.sys"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 6"));
}

#[test]
fn missing_file_is_an_io_error() {
    let out = run(&["analyze"], std::path::Path::new("/nonexistent/system.sys"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_field_or_curve_is_a_validation_error() {
    assert_eq!(run(&["verify"], &fixture("curves.sys")).status.code(), Some(3));
    let no_curve = temp_system("P = y\nQ = -x\n");
    assert_eq!(run(&["verify"], no_curve.path()).status.code(), Some(3));
    let half = temp_system("P = y\nf = x\n");
    assert_eq!(run(&["verify"], half.path()).status.code(), Some(3));
}

#[test]
fn dicritical_search_is_unavailable() {
    let out = run(&["search"], &fixture("circle.sys"));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn darboux_divisor_of_line_field() {
    let v = json("analyze", "line.sys");
    let points: Vec<&str> = v["result"]["darboux_divisor"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["point"].as_str().unwrap())
        .collect();
    assert_eq!(points, ["[1 : 0]", "[1 : 1]", "[1 : -1]"]);
}

#[test]
fn verify_reports_cofactor_and_residual() {
    let v = json("verify", "line.sys");
    let curves = v["result"].as_array().unwrap();
    assert_eq!(curves[0]["cofactor"], "x + 1");
    assert_eq!(curves[1]["invariant"], false);
    assert_eq!(curves[1]["residual"], "y^2 + 1");
    let v = json("verify", "cusp.sys");
    assert_eq!(v["result"][0]["first_integral"], true);
    assert_eq!(v["input"]["rule"], "nodal");
}

#[test]
fn search_finds_the_cusp_first_integral() {
    let v = json("search", "cusp.sys");
    assert_eq!(v["schema"], 1);
    let fams = v["result"]["families"].as_array().unwrap();
    assert_eq!(fams.len(), 1);
}

#[test]
fn genus_of_listed_curves() {
    let v = json("genus", "curves.sys");
    let genera: Vec<i64> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["genus"].as_i64().unwrap())
        .collect();
    assert_eq!(genera, [0, 0, 1, 0, 0]);
}

#[test]
fn flags_override_file_settings() {
    let out = run(&["verify", "--json", "--bound-rule", "k:3", "--shear-seed", "-2"], &fixture("cusp.sys"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["input"]["rule"], "k:3");
    assert_eq!(v["input"]["shear_seed"], -2);
    let out = run(&["verify", "--json", "--max-degree", "4", "--bound-rule", "nodal"], &fixture("line.sys"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["input"]["rule"], "explicit:4");
}

#[test]
fn text_output_is_readable() {
    let out = run(&["genus"], &fixture("cusp.sys"));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("command: genus"));
    assert!(text.contains("genus: 0"));
}
