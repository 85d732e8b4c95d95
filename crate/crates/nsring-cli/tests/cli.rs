//! End-to-end checks of the command-line surface: verbs, JSON shapes, and
//! exit codes (0 pass, 1 assertion failure, 2 inconclusive, 3 usage).

use std::process::{Command, Output};

fn nsring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn info_prints_invariants() {
    let out = nsring(&["info", "5", "6", "13", "14"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["frobenius"], 9);
    assert_eq!(j["type"], 3);
    assert_eq!(j["pf"], serde_json::json!([7, 8, 9]));
    assert_eq!(j["minimal_multiplicity"], false);
}

#[test]
fn info_rejects_bad_gcd_with_usage_exit() {
    let out = nsring(&["info", "4", "6"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ideal_trace_and_report38() {
    let out = nsring(&["ideal", "4", "9", "14", "15", "--", "8", "9", "14", "trace"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["trace"]["min_gens"], serde_json::json!([8, 9, 14, 15]));

    let out = nsring(&["ideal", "3", "4", "5", "--", "3", "4", "5", "report38"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["report38"]["all_agree"], true);
    assert_eq!(j["report38"]["c1_colon_is_m"], true);

    // report38 demands minimal multiplicity: usage error otherwise
    let out = nsring(&[
        "ideal", "5", "6", "13", "14", "--", "10", "11", "12", "report38",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ideal_colon_and_ulrich() {
    let out = nsring(&[
        "ideal", "4", "9", "14", "15", "--", "8", "9", "14", "colon", "8",
    ]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    // (t^8 : I) contains t^15 but not t^4
    let gens: Vec<i64> = j["colon"]["min_gens"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    assert!(gens.contains(&15) || gens.iter().any(|&g| 15 - g >= 0));
    let out = nsring(&["ideal", "3", "7", "8", "--", "6", "7", "8", "ulrich"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["ulrich"], true);
}

#[test]
fn classify_far_flung() {
    let out = nsring(&["classify", "3", "7", "8"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["class"], "far_flung");
    assert_eq!(j["nearly"], false);
}

#[test]
fn report_gorenstein_and_counterexample() {
    let out = nsring(&["report", "2", "3"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["classification"]["gorenstein"], true);

    let out = nsring(&["report", "5", "6", "13", "14", "--question12"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["question12"]["is_counterexample"], true);
    assert_eq!(j["question12"]["cert_j"], 1);

    let out = nsring(&[
        "report",
        "4",
        "9",
        "14",
        "15",
        "--canonical",
        "--battery",
        "--field",
        "2",
    ]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    let conds = j["battery"]["conditions"].as_array().unwrap();
    assert_eq!(conds.len(), 16);
    assert!(conds.iter().all(|c| c == false));
    assert_eq!(j["battery"]["agree"], true);
}

#[test]
fn verify_scenarios_and_exit_codes() {
    for name in [
        "section-5",
        "example-4-12",
        "corollary-3-9",
        "far-flung-family",
    ] {
        let out = nsring(&["verify", name]);
        assert!(out.status.success(), "{name} failed: {:?}", out);
    }
    let out = nsring(&["verify", "section-5", "--field", "2", "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["passed"], true);
    let out = nsring(&["verify", "no-such-scenario"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scan_writes_ndjson_and_is_deterministic() {
    let dir = std::env::temp_dir().join("nsring-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("scan.ndjson");
    let run = |path: &std::path::Path, workers: &str| {
        let out = nsring(&[
            "scan",
            "--max-genus",
            "5",
            "--checks",
            "classify,question12",
            "--workers",
            workers,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{:?}", out);
        std::fs::read_to_string(path).unwrap()
    };
    let a = run(&out_path, "1");
    let b = run(&dir.join("scan2.ndjson"), "4");
    // byte-identical modulo the timing field
    let strip = |s: &str| {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("ms");
                v.to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    let first: serde_json::Value = serde_json::from_str(a.lines().next().unwrap()).unwrap();
    assert!(first.get("generators").is_some());
}

#[test]
fn inconclusive_exit_code() {
    // depth 0 performs no checks, so the tail verdict is inconclusive
    let out = nsring(&[
        "report",
        "5",
        "6",
        "13",
        "14",
        "--question12",
        "--ext-depth",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let j = stdout_json(&out);
    assert_eq!(j["question12"]["m_kills_ext"], serde_json::Value::Null);
}

#[test]
fn scan_usage_errors() {
    let out = nsring(&["scan", "--checks", "classify"]);
    assert_eq!(out.status.code(), Some(3)); // no bound given
    let out = nsring(&["scan", "--max-genus", "3", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(3));
}
