//! End-to-end tests of the `gcomp` binary: subcommand output, exit
//! codes, determinism, and the edge-list file format.

use std::io::Write;
use std::process::{Command, Output};

fn gcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcomp"))
        .args(args)
        .output()
        .expect("failed to launch gcomp")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn spectrum_complete_csv() {
    let out = gcomp(&["spectrum", "--family", "complete", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,15,25,10,1\n");
}

#[test]
fn spectrum_json_both_methods() {
    let out = gcomp(&[
        "spectrum", "--family", "cycle", "--n", "5", "--method", "both",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["agreement"], serde_json::Value::Bool(true));
    assert_eq!(json["results"]["3"], "10");
    assert_eq!(json["request"]["family"], "cycle");
}

#[test]
fn spectrum_formula_has_no_agreement_field() {
    let out = gcomp(&["spectrum", "--family", "path", "--n", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json.get("agreement").is_none());
    assert_eq!(json["results"]["2"], "3");
}

#[test]
fn deletion_matching_both() {
    let out = gcomp(&[
        "deletion", "--family", "matching", "--n", "2", "--N", "4", "--k", "2",
        "--method", "both",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["results"]["2"], "6");
    assert_eq!(json["agreement"], serde_json::Value::Bool(true));
}

#[test]
fn deletion_all_k_csv() {
    // K4 minus D2 is C4: spectrum 1,6,4,1
    let out = gcomp(&[
        "deletion", "--family", "matching", "--n", "2", "--N", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,6,4,1\n");
}

#[test]
fn table_rows() {
    let out = gcomp(&["table", "--kind", "p", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3,0,0,1\n3,1,2,2\n3,1,3,1\n");

    // recurrence table matches the brute-force table of the same family
    let brute = gcomp(&["table", "--kind", "b", "--family", "path", "--n", "3"]);
    assert_eq!(stdout(&brute), stdout(&out));
}

#[test]
fn series_dump() {
    let out = gcomp(&["series", "--which", "F", "--order", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("0,0,0,1\n"));
    assert!(text.contains("3,1,2,-2\n"));
    assert!(text.contains("3,1,3,-1\n"));
}

#[test]
fn verify_small_succeeds() {
    let out = gcomp(&["verify", "--n-max", "4", "--N-max", "5"]);
    assert!(out.status.success(), "verify failed: {}", stdout(&out));
    assert!(stdout(&out).contains("all 10 checks passed"));
}

#[test]
fn usage_errors_exit_2() {
    let out = gcomp(&["spectrum", "--family", "cycle", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: usage:"), "stderr was {err:?}");

    let out = gcomp(&["spectrum", "--family", "tree", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // clap parse errors also exit 2
    let out = gcomp(&["spectrum", "--family", "pentagon", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["deletion", "--family", "cycle", "--n", "5", "--N", "7", "--method", "both"];
    let first = gcomp(&args);
    let second = gcomp(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    // thread count must not change a single output byte
    let threaded = gcomp(&[
        "--threads", "4", "deletion", "--family", "cycle", "--n", "5", "--N", "7",
        "--method", "both",
    ]);
    assert_eq!(first.stdout, threaded.stdout);
}

#[test]
fn edge_list_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# triangle with a pendant vertex\n4 4\n0 1\n1 2\n2 0\n2 3").unwrap();
    let path = file.path().to_str().unwrap();

    let out = gcomp(&["spectrum", "--edges", path, "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,4,4,1\n");

    // a tree payload works through --family tree
    let mut tree = tempfile::NamedTempFile::new().unwrap();
    writeln!(tree, "4 3\n0 1\n0 2\n0 3").unwrap();
    let tree_path = tree.path().to_str().unwrap();
    let out = gcomp(&[
        "spectrum", "--family", "tree", "--edges", tree_path, "--method", "both",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,3,3,1\n");

    // the paw is not a tree
    let out = gcomp(&["spectrum", "--family", "tree", "--edges", path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_limit_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_gcomp"))
        .env("GC_ORACLE_LIMIT", "3")
        .args(["spectrum", "--family", "path", "--n", "4", "--method", "oracle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("oracle limit"), "stderr was {err:?}");
}
