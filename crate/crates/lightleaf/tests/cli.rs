use std::process::Command;

use lightleaf::cli::run_from_args;

fn run(args: &[&str]) -> (i32, String, String) {
    run_from_args(std::iter::once("lightleaf").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn det_on_a1_cube() {
    let out = ok(&["--system", "A1", "det", "--word", "sss", "--target", "1"]);
    assert!(out.contains("epsilon product: +α^4"), "{out}");
    assert!(out.contains("shapovalov:      ±α^4"), "{out}");
    assert!(out.contains("match: true"), "{out}");
}

#[test]
fn det_json_shape() {
    let v = json(&["--system", "A1", "det", "--word", "sss", "--target", "1"]);
    assert_eq!(v["word"], serde_json::json!([0, 0, 0]));
    let r = &v["results"][0];
    assert_eq!(r["match"], true);
    assert_eq!(r["epsilon"]["sign"], 1);
    assert_eq!(r["shapovalov"]["sign"], "±");
    assert_eq!(r["epsilon"]["factors"], serde_json::json!([{"root": [1], "exp": 4}]));
}

#[test]
fn det_all_words_agrees() {
    let out = ok(&["--system", "B2", "det", "--all-words", "6"]);
    assert!(out.contains("all match: true"), "{out}");
}

#[test]
fn tab_lists_records() {
    let out = ok(&["--system", "A2", "tab", "--word", "s1s2s1", "--target", "1"]);
    assert!(out.contains("2 subexpressions"), "{out}");
    assert!(out.contains("(1,0,1)  U1 U0 D1  c = (0, α1+α2, 0)"), "{out}");
    let v = json(&["--system", "A1", "tab", "--word", "ss", "--target", "1"]);
    let symbols: Vec<_> = v["records"].as_array().unwrap().iter().map(|r| r["symbols"].clone()).collect();
    assert_eq!(symbols, vec![serde_json::json!(["U0", "U0"]), serde_json::json!(["U1", "D1"])]);
}

#[test]
fn dims_match_subexpression_counts() {
    let v = json(&["--system", "A2", "dims", "--word", "s1s2s1", "--target", "1"]);
    assert_eq!(v["dims"][0]["dim"], 2);
    let v = json(&["--system", "A2", "dims", "--word", "s1s2s1", "--target", "1", "--ideal"]);
    assert_eq!(v["dims"][0]["dim"], 7);
}

#[test]
fn sum_formula_in_a2() {
    let out = ok(&["--system", "A2", "sumformula", "--word", "s1s2s1", "--target", "s2"]);
    assert!(out.contains("[Δ(s1s2)] + [Δ(s2s1)]"), "{out}");
    let v = json(&["--system", "A2", "sumformula", "--word", "s1s2s1", "--target", "1", "--prime", "3"]);
    // Root heights in A2 are 1 and 2, so no weight picks up a factor of 3.
    let weights: Vec<u64> = v["terms"].as_array().unwrap().iter().map(|t| t["weight"].as_u64().unwrap()).collect();
    assert_eq!(weights.len(), 3);
    assert!(weights.iter().all(|&w| w == 1));
}

#[test]
fn decomp_reports_oracle_settled_entries() {
    let out = ok(&["--system", "A2", "decomp", "--word", "s1s2s1"]);
    assert!(out.contains("rules settled 14 of 19 entries"), "{out}");
    assert!(out.contains("oracle confirmed 5 open entries; 0 conflicts"), "{out}");
    assert_eq!(out.matches("settled-by-oracle").count(), 5);
    let v = json(&["--system", "A2", "decomp", "--word", "s1s2s1", "--oracle", "off"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 19);
    assert!(rows.iter().all(|r| r["oracle"].is_null()));
}

#[test]
fn decomp_in_characteristic_p_skips_the_oracle() {
    let (code, out, err) = run(&["--system", "B2", "decomp", "--word", "s1s2s1s2", "--prime", "3"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("characteristic 0 only"), "{err}");
    assert!(out.contains("characteristic 3"), "{out}");
}

#[test]
fn kl_polynomials_of_the_longest_a2_element() {
    let out = ok(&["--system", "A2", "kl", "--word", "s1s2s1"]);
    assert!(out.contains("h(1, w) = q^3"), "{out}");
    assert!(out.contains("h(s1s2, w) = q"), "{out}");
    let v = json(&["--system", "A2", "kl", "--word", "s1s2s1", "--target", "s2"]);
    assert_eq!(v["pairs"][0]["coeffs"], serde_json::json!([0, 0, 1]));
}

#[test]
fn realize_check_counts_roots() {
    assert!(ok(&["--system", "G2", "realize-check"]).contains("positive roots: 6"));
    let out = ok(&["--system", "affineA1", "realize-check"]);
    assert!(out.contains("positive roots: infinite"), "{out}");
    assert!(out.contains("braid relations: ok"), "{out}");
}

#[test]
fn guard_violation_exits_3() {
    let long = "s".repeat(25);
    let (code, out, err) = run(&["--system", "A1", "tab", "--word", &long, "--target", "1"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("--max-word-len"), "{err}");
    let (code, _, _) = run(&["--system", "A1", "det", "--all-words", "30"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["--system", "A3", "--max-ideal-size", "5", "decomp", "--word", "s1s2s3"]);
    assert_eq!(code, 3);
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["--system", "A2", "sumformula", "--word", "s1s2", "--target", "1", "--prime", "2"][..],
        &["--system", "A2", "sumformula", "--word", "s1s2", "--target", "1", "--prime", "9"],
        &["--system", "affineA1", "decomp", "--word", "s1s2", "--prime", "3"],
        &["--system", "nowhere", "realize-check"],
        &["realize-check"],
        &["--system", "A2", "tab", "--word", "s3", "--target", "1"],
        &["--system", "A2", "bogus"],
        &["--system", "A2", "sumformula", "--word", "s1", "--target", "s2"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn non_reduced_words_warn() {
    let (code, out, err) = run(&["--system", "A2", "decomp", "--word", "s1s1s2"]);
    assert_eq!(code, 0);
    assert!(err.contains("not reduced"), "{err}");
    assert!(out.contains("π = {z ≤ s2}"), "{out}");
}

#[test]
fn system_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.json");
    let p = path.to_str().unwrap();
    std::fs::write(&path, r#"{"name": "C2", "coxeter_matrix": [[1, 4], [4, 1]], "cartan_matrix": [[2, -2], [-1, 2]]}"#)
        .unwrap();
    let out = ok(&["--system", p, "realize-check"]);
    assert!(out.contains("system C2"), "{out}");
    assert!(out.contains("positive roots: 4 (α1, α2, α1+α2, 2α1+α2)"), "{out}");

    for bad in [
        r#"{"name": "I2(5)", "coxeter_matrix": [[1, 5], [5, 1]]}"#,
        r#"{"name": "asym", "coxeter_matrix": [[1, 3], [2, 1]]}"#,
        r#"{"name": "x", "coxeter_matrix": [[1]], "extra": 1}"#,
        "not json",
    ] {
        std::fs::write(&path, bad).unwrap();
        assert_eq!(run(&["--system", p, "realize-check"]).0, 2, "{bad}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--system", "B2", "decomp", "--word", "s1s2s1s2"][..],
        &["--system", "A3", "--format", "json", "det", "--word", "s1s2s3s1"],
        &["--system", "G2", "kl", "--word", "s1s2s1s2s1"],
    ] {
        let first = run(args);
        assert_eq!(first.0, 0, "{}", first.2);
        assert_eq!(run(args), first);
    }
}

#[test]
fn kl_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl.json");
    let p = path.to_str().unwrap();
    let fresh = ok(&["--system", "B2", "kl", "--word", "s1s2s1s2", "--cache", p]);
    let saved = std::fs::read_to_string(&path).unwrap();
    assert!(saved.contains("\"format_version\": 1"));
    let cached = ok(&["--system", "B2", "kl", "--word", "s1s2s1s2", "--cache", p]);
    assert_eq!(fresh, cached);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), saved);

    // A cache built for one system cannot be used with another.
    assert_eq!(run(&["--system", "A2", "kl", "--word", "s1s2", "--cache", p]).0, 2);

    // decomp uses the same cache for the oracle.
    let d = ok(&["--system", "B2", "decomp", "--word", "s1s2s1s2", "--cache", p]);
    assert!(d.contains("0 conflicts"), "{d}");
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lightleaf");
    let out = Command::new(bin).args(["--system", "A1", "det", "--word", "sss", "--target", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("match: true"));

    let out = Command::new(bin).args(["--system", "A1", "tab", "--word", &"s".repeat(25), "--target", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(bin)
        .args(["--system", "A2", "sumformula", "--word", "s1s2s1", "--target", "1", "--prime", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("realize-check"));
}
