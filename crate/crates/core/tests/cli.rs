use std::path::PathBuf;
use std::process::Command;

use susp6::cli::run;

fn manifest(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "manifests", name]
        .iter()
        .collect();
    p.display().to_string()
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn go(args: &[&str]) -> (String, i32) {
    let mut all = vec!["susp6"];
    all.extend_from_slice(args);
    let o = run(all);
    (o.text, o.code)
}

#[test]
fn decompose_examples() {
    let dir = tempfile::tempdir().unwrap();
    let v3 = write(&dir, "v3.json", r#"{"d": 1, "m": 0, "k": 3, "spin": true}"#);
    assert_eq!(go(&["decompose", &v3]), ("Sig^2 V3".into(), 0));

    let ns = write(
        &dir,
        "ns.json",
        r#"{"d": 1, "m": 0, "k": 2, "spin": false}"#,
    );
    assert_eq!(go(&["decompose", &ns]), ("S^4 v Sig^4 CP2".into(), 0));

    let bad = write(
        &dir,
        "bad.json",
        r#"{"d": 1, "m": 0, "torsion": [[2, 1]], "k": 1}"#,
    );
    let (text, code) = go(&["decompose", &bad]);
    assert_eq!(code, 3);
    assert!(text.contains("Torsion23"), "{text}");
}

#[test]
fn single_and_trace_flags() {
    let (text, code) = go(&["decompose", "--single", &manifest("v3_torsion.json")]);
    assert_eq!((text.as_str(), code), ("Sig M1 v 2*S^4", 0));

    let (text, _) = go(&["decompose", "--trace", &manifest("general_mixed.json")]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[6].contains("Sig Wmix"));
}

#[test]
fn k_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d0 = write(&dir, "d0.json", r#"{"d": 0, "m": 1}"#);
    let (text, code) = go(&["k", &d0]);
    assert_eq!(code, 0);
    assert!(text.starts_with("K = Z ; KO = 0\n"), "{text}");
    assert!(text.ends_with("AGREE"));

    let (text, _) = go(&["k", &manifest("cp3.json")]);
    assert!(text.starts_with("K = Z^3 ; KO = Z + Z/2\n"), "{text}");
    assert!(text.ends_with("\nAGREE"));
}

#[test]
fn k_with_torsion_reports_the_ko_torsion() {
    let dir = tempfile::tempdir().unwrap();
    let d2 = write(
        &dir,
        "d2.json",
        r#"{"d": 2, "m": 0, "torsion": [[5, 1]], "c": 1}"#,
    );
    let (text, code) = go(&["k", &d2]);
    assert_eq!(code, 0);
    assert!(
        text.starts_with("K = Z^5 + Z/5 ; KO = 2*(Z + Z/2) + Z/5"),
        "{text}"
    );
    assert!(text.contains("predicted: K = Z^5 + Z/5 ; KO = 2*(Z + Z/2)"));
    assert!(text.ends_with("DISAGREE (KO)"));
}

#[test]
fn compare_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k1 = write(&dir, "k1.json", r#"{"d": 1, "m": 0, "k": 1}"#);
    let k3 = write(&dir, "k3.json", r#"{"d": 1, "m": 0, "k": 3}"#);
    let (text, code) = go(&["compare", &k1, &k3]);
    assert_eq!(code, 0);
    assert!(text.starts_with("DISTINCT (reason: P1)"), "{text}");

    let (text, _) = go(&[
        "compare",
        &manifest("spin_even_lambda0.json"),
        &manifest("spin_even_lambda1.json"),
    ]);
    assert!(text.starts_with("DISTINCT (reason: T-secondary)"), "{text}");

    let (text, _) = go(&["compare", &k1, &k1]);
    assert!(text.starts_with("EQUIVALENT"));

    let (_, code) = go(&["compare", &k1, &manifest("general_c0.json")]);
    assert_eq!(code, 4);
}

#[test]
fn verify_examples() {
    for f in [
        "cp3.json",
        "quintic.json",
        "general_full.json",
        "s3xs3.json",
        "spin_even_lambda1.json",
    ] {
        let (text, code) = go(&["verify", &manifest(f)]);
        assert_eq!(code, 0, "{f}: {text}");
        assert!(text.ends_with("VERIFIED"));
    }
    let (text, code) = go(&[
        "verify",
        "--inject-fault",
        "swap-branch",
        &manifest("v3_torsion.json"),
    ]);
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("FAIL "));

    let (_, code) = go(&[
        "verify",
        "--inject-fault",
        "flip-lambda",
        &manifest("cp3.json"),
    ]);
    assert_eq!(code, 2);
    let (_, code) = go(&["verify", "--inject-fault", "melt", &manifest("cp3.json")]);
    assert_eq!(code, 2);
    let (_, code) = go(&["verify", &manifest("invalid/broken.json")]);
    assert_eq!(code, 2);
}

#[test]
fn pi_examples() {
    assert_eq!(go(&["pi", "P^5(7)", "7"]), ("Z/7".into(), 0));
    assert_eq!(go(&["pi", "P^4(5)", "5"]), ("0".into(), 0));
    assert_eq!(go(&["pi", "P^4(3)", "6"]), ("UNKNOWN".into(), 0));
    assert_eq!(go(&["pi", "P^4(8)", "6"]).1, 2);
    assert_eq!(go(&["pi", "Q^4", "6"]).1, 2);
}

#[test]
fn trace_stages() {
    let f = manifest("v3_torsion.json");
    assert_eq!(
        go(&["trace", "--stage", "M3", &f]),
        ("S^2 v P^3(5) v P^4(5)".into(), 0)
    );
    assert_eq!(
        go(&["trace", "--stage", "Sigma2V", &f]),
        ("Sig^2 V3".into(), 0)
    );
    let (text, code) = go(&["trace", "--stage", "M7", &f]);
    assert_eq!(code, 2);
    assert!(text.contains("UnknownStage"));
}

#[test]
fn json_output_parses() {
    let (text, code) = go(&["--json", "k", &manifest("general_mixed.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["K"], "Z^7 + Z/25 + Z/7");
    assert_eq!(v["k_agree"], true);

    let (text, _) = go(&["verify", "--json", &manifest("cp3.json")]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn batch_mode() {
    let dir = manifest("");
    let (text, code) = go(&["verify", "--batch", &dir]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(text.matches("VERIFIED").count(), 10);

    let invalid = manifest("invalid");
    let (text, code) = go(&["decompose", "--batch", &invalid]);
    assert_eq!(code, 3);
    assert_eq!(text.matches("(exit 2)").count(), 2);

    let (text, _) = go(&["--json", "decompose", "--batch", &dir]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn errors_never_exit_zero() {
    for args in [
        vec![],
        vec!["decompose"],
        vec!["decompose", "/nonexistent.json"],
        vec!["frobnicate"],
        vec!["pi", "S^3"],
        vec!["pi", "S^3", "zero"],
        vec!["compare", "/nonexistent.json", "/nonexistent.json"],
    ] {
        let (text, code) = go(&args);
        assert_ne!(code, 0, "{args:?}: {text}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_susp6");
    let out = Command::new(bin)
        .args(["decompose", &manifest("cp3.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Sig^2 CP3");

    let out = Command::new(bin)
        .args(["decompose", &manifest("invalid/spin_odd_k.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SpinContradiction"));

    let out = Command::new(bin)
        .args([
            "verify",
            "--inject-fault",
            "drop-moore",
            &manifest("v3_torsion.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL homology"));
}
