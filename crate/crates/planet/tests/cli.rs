//! End-to-end tests of the `planet` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixture.tsv")
}

fn planet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("missing {name}: {e}"))
}

fn manifest_without_volatiles(dir: &Path) -> serde_json::Value {
    let mut value: serde_json::Value =
        serde_json::from_str(&read(dir, "manifest.json")).expect("valid manifest json");
    value["timestamp_unix"] = serde_json::Value::Null;
    value["flags"]["out"] = serde_json::Value::Null;
    value
}

#[test]
fn fit_all_families_writes_summary_and_curves() {
    let out = tempfile::tempdir().unwrap();
    let fixture = fixture_path();
    let result = planet(&[
        "fit",
        "--input",
        fixture.to_str().unwrap(),
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");

    let summary = read(out.path(), "fit_summary.csv");
    let lines: Vec<&str> = summary.lines().collect();
    assert_eq!(lines.len(), 6, "header plus five families");
    assert_eq!(lines[0], "family,languages,consonants,edges,mu,epsilon,lse");
    assert!(lines[1].starts_with("IE,19,148,534,"));
    assert!(lines[3].starts_with("NC,30,135,692,"));
    for family in ["IE", "AA", "NC", "AN", "ST"] {
        let curve = read(out.path(), &format!("curve_{family}.csv"));
        assert!(curve.starts_with("k,empirical,model\n"));
        // ascending unique abscissas
        let ks: Vec<u32> = curve
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        assert!(ks.windows(2).all(|w| w[0] < w[1]));
    }
    let manifest = manifest_without_volatiles(out.path());
    assert_eq!(manifest["command"], "fit");
    assert_eq!(manifest["registry_size"], 541);
}

#[test]
fn fit_reruns_are_byte_identical() {
    let fixture = fixture_path();
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let result = planet(&[
            "fit",
            "--input",
            fixture.to_str().unwrap(),
            "--family",
            "IE",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(result.status.success());
    }
    assert_eq!(
        read(a.path(), "fit_summary.csv"),
        read(b.path(), "fit_summary.csv")
    );
    assert_eq!(
        read(a.path(), "curve_IE.csv"),
        read(b.path(), "curve_IE.csv")
    );
    assert_eq!(
        manifest_without_volatiles(a.path()),
        manifest_without_volatiles(b.path())
    );
}

#[test]
fn fit_combined_merges_families() {
    let out = tempfile::tempdir().unwrap();
    let fixture = fixture_path();
    let result = planet(&[
        "fit",
        "--input",
        fixture.to_str().unwrap(),
        "--combined",
        "AA,NC",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let summary = read(out.path(), "fit_summary.csv");
    // 17 + 30 languages, 453 + 692 edges
    assert!(summary.contains("AA+NC,47,"), "{summary}");
    assert!(summary.contains(",1145,"), "{summary}");
    assert!(out.path().join("curve_AA+NC.csv").exists());
}

#[test]
fn fit_unknown_family_fails_with_coded_error() {
    let out = tempfile::tempdir().unwrap();
    let fixture = fixture_path();
    let result = planet(&[
        "fit",
        "--input",
        fixture.to_str().unwrap(),
        "--family",
        "XX",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(!result.status.success());
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("error[unknown-family]"), "{stderr}");
}

#[test]
fn simulate_ie_degrees_writes_534_edges() {
    let out = tempfile::tempdir().unwrap();
    let fixture = fixture_path();
    let spec = format!("{}:IE", fixture.display());
    let result = planet(&[
        "simulate",
        "--epsilon",
        "0.05",
        "--degrees-from",
        &spec,
        "--seed",
        "1",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    let edges = read(out.path(), "edges.csv");
    assert_eq!(edges.lines().count(), 535, "header plus 534 edges");
    assert_eq!(edges.lines().next().unwrap(), "language,consonant");
    assert!(out.path().join("distribution.csv").exists());

    // same seed, same bytes
    let again = tempfile::tempdir().unwrap();
    let result = planet(&[
        "simulate",
        "--epsilon",
        "0.05",
        "--degrees-from",
        &spec,
        "--seed",
        "1",
        "--out",
        again.path().to_str().unwrap(),
    ]);
    assert!(result.status.success());
    assert_eq!(edges, read(again.path(), "edges.csv"));
}

#[test]
fn simulate_rejects_bad_flags() {
    let out = tempfile::tempdir().unwrap();
    let base = out.path().to_str().unwrap();

    let result = planet(&[
        "simulate",
        "--epsilon",
        "0.05",
        "--degrees",
        "3,4",
        "--runs",
        "0",
        "--out",
        base,
    ]);
    assert!(!result.status.success());
    assert!(String::from_utf8_lossy(&result.stderr).contains("error[invalid-argument]"));

    let result = planet(&[
        "simulate",
        "--epsilon",
        "-0.2",
        "--degrees",
        "3,4",
        "--out",
        base,
    ]);
    assert!(!result.status.success());
    assert!(String::from_utf8_lossy(&result.stderr).contains("error[invalid-epsilon]"));

    let result = planet(&[
        "simulate",
        "--epsilon",
        "0.05",
        "--degrees",
        "600",
        "--out",
        base,
    ]);
    assert!(!result.status.success());
    assert!(String::from_utf8_lossy(&result.stderr).contains("error[invalid-degrees]"));

    let result = planet(&["simulate", "--epsilon", "0.05", "--out", base]);
    assert!(!result.status.success());
    assert!(String::from_utf8_lossy(&result.stderr).contains("error[invalid-argument]"));
}

#[test]
fn simulate_ensemble_writes_distribution_only() {
    let out = tempfile::tempdir().unwrap();
    let result = planet(&[
        "simulate",
        "--epsilon",
        "0.3",
        "--degrees",
        "5,6,7",
        "--registry-size",
        "50",
        "--runs",
        "10",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    assert!(!out.path().join("edges.csv").exists());
    let dist = read(out.path(), "distribution.csv");
    assert!(dist.starts_with("k,p_k,P_k\n"));
}

#[test]
fn correlate_writes_symmetric_matrix() {
    let out = tempfile::tempdir().unwrap();
    let fixture = fixture_path();
    let result = planet(&[
        "correlate",
        "--input",
        fixture.to_str().unwrap(),
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let csv = read(out.path(), "correlation.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "family,IE,AA,NC,AN,ST");
    let cell = |i: usize, j: usize| lines[i].split(',').nth(j).unwrap().to_string();
    for i in 1..=5 {
        assert_eq!(cell(i, i), "1.00000", "unit diagonal");
        for j in 1..=5 {
            assert_eq!(cell(i, j), cell(j, i), "symmetry");
        }
    }
}

#[test]
fn control_reports_are_reproducible() {
    let fixture = fixture_path();
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let result = planet(&[
            "control",
            "--input",
            fixture.to_str().unwrap(),
            "--sizes",
            "5,7",
            "--trials",
            "2",
            "--seed",
            "9",
            "--grid",
            "0.01:0.3:0.01",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(result.status.success(), "{result:?}");
    }
    let trials = read(a.path(), "control_trials.csv");
    assert_eq!(trials.lines().count(), 5, "header plus 2 trials x 2 sizes");
    assert_eq!(trials, read(b.path(), "control_trials.csv"));
    let summary = read(a.path(), "control_summary.csv");
    assert!(summary.starts_with("trials,sizes,mean_epsilon\n2,5+7,"));
}

#[test]
fn fixture_subcommand_reproduces_bundled_data() {
    let out = tempfile::tempdir().unwrap();
    let result = planet(&["fixture", "--out", out.path().to_str().unwrap()]);
    assert!(result.status.success());
    let written = read(out.path(), "fixture.tsv");
    assert_eq!(written, std::fs::read_to_string(fixture_path()).unwrap());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let result = planet(&[]);
    assert_eq!(result.status.code(), Some(2));
}
