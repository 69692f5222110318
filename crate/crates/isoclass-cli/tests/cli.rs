//! End-to-end tests against the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isoclass"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn isoclass");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for isoclass")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_matches_stated_values() {
    let out = bin()
        .args(["count", "--space", "hyperbolic", "--n", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        "total 11 (elliptic 6, parabolic 2, hyperbolic 3)"
    );

    let out = bin()
        .args(["count", "--space", "euclidean", "--n", "4", "--output", "json"])
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["total"], 16);
}

#[test]
fn classify_glide_reflection() {
    let input = r#"{"space":"euclidean","n":2,"matrix":[[-1,0,0],[0,1,1.25],[0,0,1]]}"#;
    let out = run_with_stdin(&["classify", "--output", "json"], input);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["segre"], "[h;1;1]");
    assert_eq!(doc["type"], "hyperbolic");
    assert!((doc["parameters"]["translation_length"].as_f64().unwrap() - 1.25).abs() < 1e-12);
}

#[test]
fn classify_json_round_trips_through_reported_normal_form() {
    // The reported normal-form matrix must classify to the same symbol.
    let input = r#"{"space":"hyperbolic","n":3,"matrix":[
        [1.5,1.0,-0.5,0.0],[1.0,1.0,-1.0,0.0],[0.5,1.0,0.5,0.0],[0.0,0.0,0.0,-1.0]]}"#;
    let out = run_with_stdin(&["classify", "--output", "json"], input);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["segre"], "[p;3;1]");
    assert_eq!(doc["proper"], true);

    let again = serde_json::json!({
        "space": "hyperbolic",
        "n": 3,
        "matrix": doc["normal_form"]["matrix"],
    });
    let out2 = run_with_stdin(&["classify", "--output", "json"], &again.to_string());
    assert!(out2.status.success());
    let doc2: serde_json::Value = serde_json::from_str(&stdout_of(&out2)).unwrap();
    assert_eq!(doc2["segre"], "[p;3;1]");
}

#[test]
fn reconstruct_from_dimension_vectors() {
    let out = bin()
        .args(["reconstruct", "--space", "spherical", "--n", "3", "--d", "1;0,0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "[(1 1),2]");

    // Leading -1 entries (empty varieties) must parse as a value, not as
    // a flag.
    let out = bin()
        .args(["reconstruct", "--space", "euclidean", "--n", "3", "--d", "-1;0;1"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_of(&out).trim(), "[h;1;2]");
}

#[test]
fn enumerate_matches_count() {
    for (space, n) in [("spherical", 3i64), ("euclidean", 4), ("hyperbolic", 3)] {
        let out = bin()
            .args(["enumerate", "--space", space, "--n", &n.to_string()])
            .output()
            .unwrap();
        assert!(out.status.success());
        let lines = stdout_of(&out).lines().count();
        let count_out = bin()
            .args(["count", "--space", space, "--n", &n.to_string(), "--output", "json"])
            .output()
            .unwrap();
        let doc: serde_json::Value = serde_json::from_str(&stdout_of(&count_out)).unwrap();
        assert_eq!(lines as u64, doc["total"].as_u64().unwrap());
    }
}

#[test]
fn varieties_report_components_and_dvector() {
    let out = bin()
        .args([
            "varieties",
            "--space",
            "euclidean",
            "--n",
            "3",
            "--symbol",
            "[e;1;2]",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("Gamma(1) = P1xE1 u *"), "got: {text}");
    assert!(text.contains("d = [1;(2,0);(1,1)]"), "got: {text}");
}

#[test]
fn tables_are_byte_identical_across_runs() {
    let a = bin().args(["tables"]).output().unwrap();
    let b = bin().args(["tables"]).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout_of(&a);
    // Spot checks against the reference rows.
    assert!(text.contains("[p;4;0]\tTh+I(1)\t[-1;-1;1]"), "got: {text}");
    assert!(text.contains("[4]\teI(4)\t[3;4;3]"));
    assert!(text.contains("[h;1;1]\t-I(1)+T(a)\t[-1;0]"));
}

#[test]
fn tables_match_committed_goldens() {
    // Regenerating every table must reproduce the files under goldens/
    // byte for byte.
    let goldens = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../goldens")
        .canonicalize()
        .expect("goldens directory");
    for space in ["spherical", "euclidean", "hyperbolic"] {
        for n in 1..=3 {
            let out = bin()
                .args(["tables", "--space", space, "--n", &n.to_string()])
                .output()
                .unwrap();
            assert!(out.status.success());
            let committed =
                std::fs::read_to_string(goldens.join(format!("table_{space}_{n}.tsv"))).unwrap();
            assert_eq!(
                stdout_of(&out),
                committed,
                "golden drift for {space} n={n}"
            );
        }
    }
}

#[test]
fn tables_write_files() {
    let dir = std::env::temp_dir().join(format!("isoclass_tables_{}", std::process::id()));
    let out = bin()
        .args(["tables", "--space", "spherical", "--n", "3", "--out"])
        .arg(&dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let path = dir.join("table_spherical_3.tsv");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("[(2 2)]\tR(th)^2\t[-1;2;-1]"));
    assert!(text.starts_with("# spherical n=3"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    // Not in the group: exit 3.
    let input = r#"{"space":"spherical","n":1,"matrix":[[2,0],[0,1]]}"#;
    let out = run_with_stdin(&["classify"], input);
    assert_eq!(out.status.code(), Some(3));

    // Bad JSON: exit 2.
    let out = run_with_stdin(&["classify", "--space", "spherical", "--n", "1"], "{nope");
    assert_eq!(out.status.code(), Some(2));

    // Dimension out of range: exit 2.
    let out = bin()
        .args(["count", "--space", "euclidean", "--n", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Near-coincident rotation angles: result still printed, exit 4.
    let c1 = 1.0f64.cos();
    let s1 = 1.0f64.sin();
    let c2 = (1.0f64 + 5e-7).cos();
    let s2 = (1.0f64 + 5e-7).sin();
    let input = format!(
        r#"{{"space":"spherical","n":3,"matrix":[[{c1},{},0,0],[{s1},{c1},0,0],[0,0,{c2},{}],[0,0,{s2},{c2}]]}}"#,
        -s1, -s2
    );
    let out = run_with_stdin(&["classify", "--output", "json"], &input);
    assert_eq!(out.status.code(), Some(4));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["segre"], "[(1 1),(1 1)]");
    assert!(!doc["warnings"].as_array().unwrap().is_empty());

    // Improper Lorentz input: classified with proper = false, exit 0.
    let input = r#"{"space":"hyperbolic","n":1,"matrix":[[-1,0],[0,-1]]}"#;
    let out = run_with_stdin(&["classify", "--output", "json"], input);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["proper"], false);
    assert_eq!(doc["segre"], "[e;2;0]");
}

#[test]
fn space_flag_conflicts_are_rejected() {
    let input = r#"{"space":"euclidean","n":2,"matrix":[[1,0,0],[0,1,0],[0,0,1]]}"#;
    let out = run_with_stdin(&["classify", "--space", "spherical"], input);
    assert_eq!(out.status.code(), Some(2));
}
