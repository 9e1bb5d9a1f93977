use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seidelcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eig_reports_relation_to_threshold() {
    assert!(stdout(&["eig", "K(1,5)+iso(41)"]).starts_with("lambda_min < -5\n"));
    assert!(stdout(&["eig", "K(1,5)+iso(40)"]).starts_with("lambda_min = -5\n"));
    assert!(stdout(&["eig", "K(1,5)+iso(39)"]).starts_with("lambda_min >= -5\n"));
    assert!(stdout(&["eig", "Et+(8)+iso(2476)"]).starts_with("lambda_min = -5"));
    let small = stdout(&["eig", "iso(3)", "--threshold", "-1"]);
    assert_eq!(small, "lambda_min = -1\ncharpoly = (x - 2) (x + 1)^2\n");
}

#[test]
fn rank_classify_alpha_omega() {
    assert_eq!(stdout(&["rank", "2*At(2)", "--shift", "5"]), "5\n");
    assert_eq!(stdout(&["rank", "iso(6)", "--shift", "1"]), "1\n");
    assert_eq!(stdout(&["classify", "Dt(5)"]), "rho = 2 (Dt(5))\n");
    assert_eq!(stdout(&["alpha-omega", "C(5)"]), "alpha = 3\nomega = 3\n");
}

#[test]
fn bad_input_exits_with_two() {
    let out = run(&["eig", "K(1,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn reports_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for suite in [
        "padding",
        "star",
        "thresholds",
        "pillar41",
        "srg",
        "smith",
        "catalog",
        "counting",
    ] {
        let golden = std::fs::read_to_string(dir.join(format!("{suite}.jsonl"))).unwrap();
        let out = run(&["verify", suite]);
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            golden,
            "suite {suite}"
        );
        // the shipped catalog carries five refuted minimality claims
        let expect_ok = suite != "catalog";
        assert_eq!(out.status.success(), expect_ok, "suite {suite}");
    }
}

#[test]
fn report_file_and_alternate_catalog() {
    let tmp = std::env::temp_dir().join(format!("seidelcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let catalog = tmp.join("catalog.tsv");
    let src =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog.tsv"))
            .unwrap();
    let kept: String = src
        .lines()
        .filter(|l| l.starts_with('#') || l.contains("K(4)"))
        .map(|l| format!("{l}\n"))
        .collect();
    std::fs::write(&catalog, kept).unwrap();
    let report = tmp.join("out.jsonl");
    let out = run(&[
        "verify",
        "catalog",
        "--catalog",
        catalog.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(!text.is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "verified");
    }
    std::fs::remove_dir_all(&tmp).ok();
}
