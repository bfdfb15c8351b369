//! Golden-file tests pinning the JSON schema of every subcommand. The
//! machine output must be byte-identical across runs, so the comparison is
//! exact. Each document must also parse back as JSON with the envelope
//! fields `command`, `inputs`, `result`, `version`.

use serde_json::Value;

fn run_json(args: &[&str]) -> String {
    let argv: Vec<String> = std::iter::once("fbc".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .chain(std::iter::once("--json".to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fbc::cli::run(&argv, &mut out, &mut err);
    assert_eq!(
        code,
        0,
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&err)
    );
    String::from_utf8(out).unwrap()
}

fn check(golden: &str, args: &[&str]) {
    let first = run_json(args);
    assert_eq!(first, golden, "golden mismatch for {:?}", args);
    // byte-identical across runs
    assert_eq!(run_json(args), first);
    // and a valid envelope
    let doc: Value = serde_json::from_str(&first).unwrap();
    for field in ["command", "inputs", "result", "version"] {
        assert!(doc.get(field).is_some(), "missing envelope field {}", field);
    }
    assert!(doc["version"]["tool"].is_string());
    assert!(doc["version"]["catalog"].is_string());
}

#[test]
fn classify_golden() {
    check(
        include_str!("golden/classify.json"),
        &["classify", "2,1;1,1"],
    );
}

#[test]
fn h1_golden() {
    check(include_str!("golden/h1.json"), &["h1", "1,6;0,1"]);
}

#[test]
fn profile_golden() {
    check(
        include_str!("golden/profile.json"),
        &["profile", "0,-1;1,0", "--depth", "4"],
    );
}

#[test]
fn fingerprint_golden() {
    check(
        include_str!("golden/fingerprint.json"),
        &["fingerprint", "1,1;1,0"],
    );
}

#[test]
fn compatible_golden() {
    check(
        include_str!("golden/compatible.json"),
        &["compatible", "2,1;1,1", "1,-1;1,0"],
    );
}

#[test]
fn identify_golden() {
    check(
        include_str!("golden/identify.json"),
        &["identify", "1,1;1,0"],
    );
}

#[test]
fn conj_golden() {
    check(
        include_str!("golden/conj.json"),
        &["conj", "2,1;1,1", "1,1;1,2"],
    );
}

#[test]
fn localconj_golden() {
    check(
        include_str!("golden/localconj.json"),
        &["localconj", "2,1;1,1", "1,-1;1,0", "--bound", "10"],
    );
}

#[test]
fn census_golden() {
    check(
        include_str!("golden/census.json"),
        &["census", "--tr", "6", "--det", "1"],
    );
}

#[test]
fn present_golden() {
    check(include_str!("golden/present.json"), &["present", "2,1;1,1"]);
}

#[test]
fn abel_golden() {
    check(
        include_str!("golden/abel.json"),
        &["abel", "a b | a a = b b b"],
    );
}

#[test]
fn epi_golden() {
    check(
        include_str!("golden/epi.json"),
        &[
            "epi",
            "x y | y x Y x y = x y X y x",
            "--target",
            "dihedral:10",
            "--count",
        ],
    );
}

#[test]
fn quotients_golden() {
    check(
        include_str!("golden/quotients.json"),
        &["quotients", "a b | a a = b b b", "--max-order", "12"],
    );
}

#[test]
fn compare_golden() {
    check(
        include_str!("golden/compare.json"),
        &[
            "compare",
            "x y | y x Y x y = x y X y x",
            "a b | a a = b b b",
            "--max-order",
            "10",
        ],
    );
}

#[test]
fn pf_catalog_max_overrides_the_default_ceiling() {
    // every other test in this binary passes --max-order explicitly, so
    // touching the process environment here cannot race with them
    std::env::set_var("PF_CATALOG_MAX", "8");
    let out = run_json(&["quotients", "a | a a"]);
    std::env::remove_var("PF_CATALOG_MAX");
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["inputs"]["max_order"], "8");
    assert_eq!(doc["result"]["catalog_version"], "families-v1;max-order=8");
    let hits: Vec<&str> = doc["result"]["quotients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(hits, ["cyclic:2"]);
}
