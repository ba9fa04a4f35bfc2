//! End-to-end runs of the binary: format conformance, determinism, exit
//! codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sturmkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sturmkit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sturmkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn complexity_of_constant_word_file() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("constant.txt");
    std::fs::write(&path, "aaaa\n").unwrap();
    let out = sturmkit(&["complexity", "--word-file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let body = stdout(&out);
    let rows: Vec<&str> = body.lines().skip_while(|l| l.starts_with('#')).collect();
    assert_eq!(rows, vec!["n,T", "1,1", "2,1", "3,1"]);
}

#[test]
fn stdin_and_file_agree_byte_for_byte() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("piped.txt");
    std::fs::write(&path, "abaababa\n").unwrap();
    let from_file = sturmkit(&["complexity", "--word-file", path.to_str().unwrap()]);
    let from_pipe = sturmkit_stdin(&["complexity"], "abaababa\n");
    assert!(from_file.status.success() && from_pipe.status.success());
    assert_eq!(from_file.stdout, from_pipe.stdout);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "complexity",
        "--generate",
        "sturmian",
        "--alpha",
        "golden",
        "-N",
        "500",
        "--n-max",
        "20",
    ];
    let first = sturmkit(&args);
    let second = sturmkit(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn rauzy_table_keeps_edge_vertex_gap() {
    let out = sturmkit(&[
        "rauzy",
        "--generate",
        "sturmian",
        "-N",
        "3000",
        "--k-max",
        "30",
        "--verify",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines().filter(|l| !l.starts_with('#')).skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let vertices: usize = fields[1].parse().unwrap();
        let edges: usize = fields[2].parse().unwrap();
        assert_eq!(edges, vertices + 1, "row {line}");
    }
}

#[test]
fn ancestry_chain_ends_at_base() {
    let out = sturmkit(&["rauzy", "--ancestry", "0,3,4"]);
    assert!(out.status.success());
    let body = stdout(&out);
    assert_eq!(body.lines().last().unwrap(), "0,1,2");
}

#[test]
fn failed_verification_exits_with_two() {
    // a word with more than one fork pair cannot pass --verify
    let out = sturmkit_stdin(
        &["rauzy", "--k-max", "3", "--verify"],
        "aababbabbaabbbaaabab\n",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("# verify: FAILED"));
}

#[test]
fn dot_output_is_structurally_valid() {
    let out = sturmkit(&[
        "rauzy",
        "--generate",
        "sturmian",
        "-N",
        "400",
        "--k",
        "2",
        "--dot",
    ]);
    assert!(out.status.success());
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next().unwrap(), "digraph factors {");
    assert_eq!(body.lines().last().unwrap(), "}");
    let edge_re_ok = body
        .lines()
        .filter(|l| l.contains("->"))
        .all(|l| l.trim_end().ends_with("];") && l.contains("[label="));
    assert!(edge_re_ok, "every edge line carries a label attribute");
    assert_eq!(body.matches('{').count(), body.matches('}').count());
}

#[test]
fn rotation_emits_word_from_system_file() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sys.txt");
    std::fs::write(
        &path,
        "alpha: -1 1 2 5\nsymbols: a b\narc: a 0 1\narc: b 1 0\n",
    )
    .unwrap();
    let out = sturmkit(&["rotation", "--system", path.to_str().unwrap(), "-N", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last().unwrap(), "ababaaba");
}

#[test]
fn rotation_rejects_bad_partition_file() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(
        &path,
        "alpha: -1 1 2 5\nsymbols: a b\narc: a 0 1\narc: b 1 2\n",
    )
    .unwrap();
    let out = sturmkit(&["rotation", "--system", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dual_check_passes_for_grouped_system() {
    let out = sturmkit(&[
        "rotation",
        "--alpha",
        "golden",
        "--grouped-k",
        "2",
        "--check-dual",
        "-N",
        "1000",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dual-check: ok"));
}

#[test]
fn grouped_verify_reports_offset() {
    let out = sturmkit(&[
        "rotation",
        "--alpha",
        "golden",
        "--grouped-k",
        "2",
        "--verify",
        "--n-max",
        "60",
        "-N",
        "5000",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("minimal-growth: ok K=2"));
}

#[test]
fn algebra_classifies_single_obstruction_file() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ab.txt");
    std::fs::write(&path, "ab\n").unwrap();
    let out = sturmkit(&[
        "algebra",
        "--obstructions",
        path.to_str().unwrap(),
        "--n-max",
        "40",
        "--classify",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# verdict: BOUNDARY_CASE1"));
}

#[test]
fn algebra_free_presentation_is_superlinear() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("free.txt");
    std::fs::write(&path, "alphabet: a b\n").unwrap();
    let out = sturmkit(&[
        "algebra",
        "--obstructions",
        path.to_str().unwrap(),
        "--n-max",
        "12",
        "--classify",
        "--horizon",
        "12",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# verdict: SUPERLINEAR"));
}

#[test]
fn algebra_sturmian_obstructions_emit_list_and_profile() {
    let out = sturmkit(&[
        "algebra",
        "--sturmian-obstructions",
        "golden",
        "-m",
        "8",
        "--n-max",
        "8",
    ]);
    assert!(out.status.success());
    let body = stdout(&out);
    assert!(body.contains("# obstruction: bb"));
    assert!(body.contains("# obstruction: aabaabaa"));
    assert!(body.lines().any(|l| l == "8,45,9,9"));
}

#[test]
fn algebra_json_report_parses() {
    let dir = std::env::temp_dir().join("sturmkit-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ab-json.txt");
    std::fs::write(&path, "ab\n").unwrap();
    let out = sturmkit(&[
        "algebra",
        "--obstructions",
        path.to_str().unwrap(),
        "--n-max",
        "10",
        "--classify",
        "--horizon",
        "24",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["classification"]["verdict"], "BOUNDARY_CASE1");
    assert_eq!(doc["profile"][3]["T"], "4");
}

#[test]
fn unknown_input_exits_with_error() {
    let out = sturmkit(&["complexity", "--word-file", "/nonexistent/missing.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}
