use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cdelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdelta")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn headline_point_reports_eighteen() {
    let out = cdelta(&["verify", "main-thm", "--p", "2", "--n", "8", "--t", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "main-thm");
    assert_eq!(v["grid"][0]["observed"], 18);
    assert_eq!(v["grid"][0]["verdict"]["status"], "pass");
}

#[test]
fn cdu_all_c_on_aes_size_field() {
    let out = cdelta(&["cdu", "--p", "2", "--n", "8", "--fn", "inv+mono:4", "--all-c", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["max_c_ne_1"], 18);
}

#[test]
fn report_corpus_csv_layout() {
    let out = cdelta(&["report", "--corpus"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name,DU,cDU,cDU_w_linearized_monomial");
    assert!(lines.contains(&"Rectangle,4,5,7"));
    assert!(lines.contains(&"Serpent-3,4,6,5"));
    assert_eq!(lines.len(), 7);
    // diagnostics stay off stdout
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cdelta(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cdelta(&["cdu", "--n", "4", "--bogus"]).status.code(), Some(2));
    assert_eq!(cdelta(&["cdu", "--n", "4", "--fn", "cube"]).status.code(), Some(2));
    assert_eq!(cdelta(&["cdu", "--fn", "inv"]).status.code(), Some(2));
    assert_eq!(cdelta(&["field", "--p", "4", "--n", "2"]).status.code(), Some(2));
    assert_eq!(cdelta(&["field", "--n", "4", "--modulus", "0x15"]).status.code(), Some(2));
    assert_eq!(cdelta(&["cdu", "--n", "4", "--c", "16"]).status.code(), Some(2));
    assert_eq!(cdelta(&["--help"]).status.code(), Some(0));
}

#[test]
fn failed_verification_exits_one() {
    let out = cdelta(&["verify", "weil", "--p", "3", "--n", "3", "--samples", "20", "--kernel", "restated"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
    let out = cdelta(&["verify", "weil", "--p", "3", "--n", "3", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn field_accepts_hex_and_coefficients() {
    let hex = json(&cdelta(&["field", "--modulus", "0x11b", "--json"]));
    let coeffs = json(&cdelta(&["field", "--modulus", "1,1,0,1,1,0,0,0,1", "--json"]));
    let aes = json(&cdelta(&["field", "--aes-field", "--json"]));
    assert_eq!(hex, coeffs);
    assert_eq!(hex, aes);
    assert_eq!(hex["n"], 8);
    assert_eq!(hex["modulus_value"], 283);
}

#[test]
fn sbox_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    let table: Vec<u32> = (0..16).collect();
    fs::write(&path, serde_json::json!({"name": "id", "n": 4, "table": table}).to_string()).unwrap();
    let out = cdelta(&["report", "--sbox", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().nth(1), Some("id,16,1,16"));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"name": "bad", "n": 4, "table": [0, 1, 2]}"#).unwrap();
    let out = cdelta(&["report", "--sbox", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_and_poly_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("cube.json");
    let f = |x: u32| -> u32 {
        // x^3 in F_16 with modulus x^4 + x + 1
        let mul = |a: u32, b: u32| {
            let mut r = 0u32;
            for i in 0..4 {
                if b >> i & 1 == 1 {
                    r ^= a << i;
                }
            }
            for i in (4..8).rev() {
                if r >> i & 1 == 1 {
                    r ^= 0x13 << (i - 4);
                }
            }
            r
        };
        mul(mul(x, x), x)
    };
    let values: Vec<u32> = (0..16).map(f).collect();
    fs::write(&table, serde_json::to_string(&values).unwrap()).unwrap();
    let poly = dir.path().join("cube-poly.json");
    fs::write(&poly, r#"{"terms": [{"e": 3, "c": 1}]}"#).unwrap();
    let from_table = stdout(&cdelta(&["spectrum", "--fn", &format!("table:{}", table.display())]));
    let from_poly = stdout(&cdelta(&["spectrum", "--n", "4", "--fn", &format!("poly:{}", poly.display())]));
    let from_mono = stdout(&cdelta(&["spectrum", "--n", "4", "--fn", "mono:3"]));
    assert_eq!(from_table, from_mono);
    assert_eq!(from_poly, from_mono);
    let interp = stdout(&cdelta(&["interpolate", "--fn", &format!("table:{}", table.display())]));
    assert_eq!(interp.lines().next(), Some("x^3"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cddt.csv");
    let out = cdelta(&["cddt", "--n", "2", "--c", "0", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("a,0,1,2,3"));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["spectrum", "--n", "6", "--fn", "inv+mono:2", "--json"];
    let one = cdelta(&[&["--threads", "1"][..], &args[..]].concat());
    let four = cdelta(&[&["--threads", "4"][..], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn charsum_outputs() {
    let gauss = json(&cdelta(&["charsum", "gauss", "--p", "5", "--n", "2"]));
    let entries = gauss.as_array().unwrap();
    assert_eq!(entries.len(), 23);
    assert!(entries.iter().all(|e| (e["abs"].as_f64().unwrap() - 5.0).abs() < 1e-6));

    let weil = cdelta(&["charsum", "weil", "--p", "3", "--n", "2"]);
    assert_eq!(weil.status.code(), Some(0));
    let reports = json(&weil);
    assert_eq!(reports.as_array().unwrap().len(), 8);
    assert!(reports[0]["S_alpha"]["re"].is_number());
    assert!(reports[0]["N_alpha"].is_u64());

    assert_eq!(cdelta(&["charsum", "gauss", "--p", "2", "--n", "3", "--csv"]).status.code(), Some(2));
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["gcd", "bluher"] {
        let out = cdelta(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(json(&out)["passed"], true);
    }
    let out = cdelta(&["verify", "second-thm", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["grid"].as_array().unwrap().len(), 2);
}
