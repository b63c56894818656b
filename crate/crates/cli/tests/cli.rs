//! End-to-end tests of the `latcli` binary: exit codes, JSON shapes, the
//! file-format round trip, and output determinism.

use std::fs;
use std::process::{Command, Output};

fn latcli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latcli"))
        .args(args)
        .output()
        .expect("latcli runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn verify_single_case_exits_zero() {
    let out = latcli(&["verify", "--case", "dih4_12"]);
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["rank"], 12);
    assert_eq!(v["product_order"], 2);
    assert_eq!(v["f_label"], "DD4");
}

#[test]
fn verify_unknown_case_exits_two() {
    let out = latcli(&["verify", "--case", "dih99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn atlas_certificate_shape() {
    let out = latcli(&["atlas", "m_4_25"]);
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["det"], "25");
    assert_eq!(v["certificate"]["even"], true);
    assert_eq!(v["certificate"]["rank"], 4);

    let bad = latcli(&["atlas", "nope"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn case_emit_then_classify_round_trip() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pair = dir.path().join("pair.json");
    let out = latcli(&["case", "dih10_16", "--emit", pair.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(pair.exists());

    let out = latcli(&["classify", "--pair", pair.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["product_order"], 5);
    assert_eq!(v["dihedral_order"], 10);
    assert_eq!(v["is_rootless"], true);
    assert_eq!(v["rank"], 16);
    assert_eq!(v["inputs_ee8"], serde_json::json!([true, true]));
    // The report echoes a hash of the input file.
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn snf_and_shortvec_on_emitted_lattice() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = latcli(&["atlas", "aa2"]);
    let v = stdout_json(&out);
    let lat = dir.path().join("aa2.json");
    fs::write(&lat, serde_json::to_string(&v["lattice"]).unwrap()).unwrap();

    let out = latcli(&["snf", "--file", lat.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["divisors"], serde_json::json!(["2", "6"]));
    assert_eq!(v["det"], "12");

    let out = latcli(&["shortvec", "--file", lat.to_str().unwrap(), "--norm", "4"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 6);

    // Fractional norms parse.
    let out = latcli(&["shortvec", "--file", lat.to_str().unwrap(), "--norm", "7/2"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 0);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().expect("tempdir");
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"ambient_dim\": 2}").unwrap();
    let out = latcli(&["snf", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn leech_octad_listing() {
    let out = latcli(&["leech", "--octads"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 759);
    assert_eq!(v["octads"].as_array().unwrap().len(), 759);
    // First octad in member-lex order starts at position 0.
    assert_eq!(v["octads"][0][0], 0);
}

/// The full verification JSON must be byte-identical across runs.
#[test]
fn verify_all_is_deterministic() {
    let a = latcli(&["verify", "--all"]);
    let b = latcli(&["verify", "--all"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
