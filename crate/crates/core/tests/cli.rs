//! The installed binary: exit codes and written files.

use std::process::Command;

fn bhmirror(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bhmirror")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_json() {
    let (code, out, _) = bhmirror(&["analyze", "loop:5,3", "--index", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tilting_length"], 9);
    assert_eq!(v["fjrw"]["total"], 9);
}

#[test]
fn exit_codes() {
    assert_eq!(bhmirror(&["analyze", "loop:five,3"]).0, 2);
    assert_eq!(bhmirror(&["analyze", "loop:5,3", "--index", "4"]).0, 3);
    assert_eq!(bhmirror(&["verify", "loop:3,3", "--index", "2"]).0, 0);
    let (code, out, _) = bhmirror(&["verify", "loop:3,3", "--index", "2", "--corrupt", "demo"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    let (code, _, err) = bhmirror(&["verify", "loop:3,3", "--index", "2", "--corrupt", "other"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn export_writes_dot() {
    let path = std::env::temp_dir().join(format!("bhmirror-export-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _, _) = bhmirror(&["export", "chain:4,3", "--index", "2", "--dot", p]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    let (_, stdout, _) = bhmirror(&["export", "chain:4,3", "--index", "2", "--format", "dot"]);
    assert_eq!(stdout, dot);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn small_grid_sweep() {
    let (code, out, _) = bhmirror(&["grid", "--max", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.trim_end().ends_with("all passed"));
    assert!(out.contains("reduces to loop:2,2 --index 1"));
}
