//! End-to-end tests of the `spinforge` binary: output formats, the exit-code
//! contract for every subcommand family, determinism, and the golden report.

use std::process::{Command, Output};

fn spinforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinforge"))
        .args(args)
        .env_remove("SPINFORGE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn product_example_from_contract() {
    let out = spinforge(&[
        "product",
        "--variant",
        "spin4",
        "0,0,1,0,0,0,0,0",
        "0,0,0,1,0,0,0,0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "0,0,0,0,0,-1,0,0");
}

#[test]
fn bracket_prints_six_components() {
    let out = spinforge(&["bracket", "--variant", "spin4", "1,0,0,0,0,0", "0,1,0,0,0,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "0,0,0,-1,0,0");
}

#[test]
fn rep_identity_octet_prints_identity_matrix() {
    let out = spinforge(&[
        "rep",
        "--variant",
        "spin4",
        "--source",
        "derived",
        "1,0,0,0,0,0,0,0",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.trim().lines().collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], "1, 0, 0, 0, 0, 0, 0, 0");
    assert_eq!(rows[7], "0, 0, 0, 0, 0, 0, 0, 1");
}

#[test]
fn member_true_exits_zero_false_exits_one() {
    let yes = spinforge(&["member", "--group", "spin4", "1,0,0,0,0,0,0,0"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes).trim(), "true");

    let no = spinforge(&["member", "--group", "spin4", "2,0,0,0,0,0,0,0"]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no).trim(), "false");
}

#[test]
fn sample_spin4_emits_members_g1_g2_refuse() {
    let ok = spinforge(&["sample", "--group", "spin4", "--seed", "9"]);
    assert_eq!(code(&ok), 0);
    let octet = stdout(&ok).trim().to_string();
    let member = spinforge(&["member", "--group", "spin4", &octet]);
    assert_eq!(code(&member), 0);

    for group in ["g1", "g2"] {
        let refused = spinforge(&["sample", "--group", group, "--seed", "9"]);
        assert_eq!(code(&refused), 1, "{group} sampler must refuse");
        let err = String::from_utf8(refused.stderr).unwrap();
        assert!(err.contains("sampler unavailable"), "stderr: {err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag value, bad vector literal, unknown subcommand, and an
    // unparseable seed env var all land on exit code 2.
    assert_eq!(
        code(&spinforge(&["product", "--variant", "nope", "1", "1"])),
        2
    );
    assert_eq!(
        code(&spinforge(&[
            "bracket",
            "--variant",
            "spin4",
            "1,2,3",
            "4,5,6"
        ])),
        2,
        "six components required"
    );
    assert_eq!(code(&spinforge(&["no-such-command"])), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_spinforge"))
        .args(["sample", "--group", "spin4"])
        .env("SPINFORGE_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_env_var_matches_explicit_flag() {
    let flagged = spinforge(&["sample", "--group", "spin4", "--seed", "123"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_spinforge"))
        .args(["sample", "--group", "spin4"])
        .env("SPINFORGE_SEED", "123")
        .output()
        .unwrap();
    assert_eq!(stdout(&flagged), String::from_utf8(via_env.stdout).unwrap());
}

#[test]
fn manifold_subcommands_cover_exact_workflow() {
    let sampled = spinforge(&["manifold", "sample", "--seed", "4"]);
    assert_eq!(code(&sampled), 0);
    let point = stdout(&sampled).trim().to_string();

    let tangent = spinforge(&["manifold", "tangent", &point]);
    assert_eq!(code(&tangent), 0);
    assert_eq!(stdout(&tangent).trim().lines().count(), 4);

    let first_tangent = stdout(&tangent).trim().lines().next().unwrap().to_string();
    let j = spinforge(&["manifold", "j", &point, &first_tangent]);
    assert_eq!(code(&j), 0);

    // A vector off the tangent space is rejected as a check failure.
    let bad = spinforge(&["manifold", "j", &point, &point]);
    assert_eq!(code(&bad), 1);

    // Off-manifold points are rejected by tangent/j.
    let off = spinforge(&["manifold", "tangent", "1,1,1,1,1,1"]);
    assert_eq!(code(&off), 1);
}

#[test]
fn manifold_project_converges_in_float_mode() {
    let out = spinforge(&["manifold", "project", "--float", "1,1,0,0,0,1"]);
    assert_eq!(code(&out), 0);
    let projected = stdout(&out).trim().to_string();
    let member = spinforge(&["manifold", "tangent", "--float", &projected]);
    assert_eq!(code(&member), 0);
}

#[test]
fn em_matrices_and_defect() {
    let f = spinforge(&["em", "f", "1,0,0,0,0,0"]);
    assert_eq!(code(&f), 0);
    assert_eq!(stdout(&f).trim().lines().count(), 4);

    let defect = spinforge(&["em", "defect", "1,2,3,0,0,0"]);
    assert_eq!(code(&defect), 0);
    assert_eq!(stdout(&defect).trim(), "112", "8 * (1 + 4 + 9)");

    let verbatim = spinforge(&["em", "spin", "0,0,0,0,1,0"]);
    let corrected = spinforge(&["em", "spin", "0,0,0,0,1,0", "--corrected"]);
    assert_eq!(code(&verbatim), 0);
    assert_ne!(stdout(&verbatim), stdout(&corrected));
}

#[test]
fn verify_default_passes_and_b1_fails() {
    let ok = spinforge(&["verify"]);
    assert_eq!(code(&ok), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&ok)).expect("valid JSON");
    assert_eq!(report["meta"]["seed"], 42);
    assert!(report["identities"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["status"] == "PASS"));

    let b1 = spinforge(&["verify", "--variant", "b1"]);
    assert_eq!(code(&b1), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&b1)).unwrap();
    let fails: Vec<&str> = report["identities"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "FAIL")
        .map(|e| e["identity"].as_str().unwrap())
        .collect();
    assert_eq!(
        fails,
        [
            "triple-product-expansion",
            "star-associativity",
            "rep-derived-homomorphism",
            "rep-printed-derived-agree"
        ]
    );
    // Every FAIL entry carries its counterexample tuple verbatim.
    for e in report["identities"].as_array().unwrap() {
        if e["status"] == "FAIL" {
            assert!(e["counterexample"].is_array());
            assert!(e["lhs"].is_string() && e["rhs"].is_string());
        }
    }
}

#[test]
fn verify_rejects_float_mode() {
    let out = spinforge(&["verify", "--float"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_is_byte_deterministic_and_matches_golden_file() {
    let a = spinforge(&["verify", "--seed", "42"]);
    let b = spinforge(&["verify", "--seed", "42"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "same seed must be byte-identical");

    let golden = include_str!("golden/verify_seed42.json");
    assert_eq!(
        stdout(&a),
        golden,
        "default report drifted from the committed golden file; \
         inspect the diff and re-freeze only if the change is intended"
    );
}

#[test]
fn bench_reports_all_three_encodings() {
    let out = spinforge(&["bench", "--n", "2000", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for enc in ["mat8", "mat4c", "quatpair"] {
        assert!(text.contains(&format!("{enc}: median ")), "{text}");
    }
    assert_eq!(
        code(&spinforge(&["bench", "--encodings", "bogus", "--n", "10"])),
        2
    );
}
