use std::io::Write;
use std::process::{Command, Output, Stdio};

fn avecc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_avecc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_from_stdin() {
    let o = avecc(&["invariants", "--g6", "-"], "C~\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["average_eccentricity"], "1/1");
    assert_eq!(v["clique"], 4);
}

#[test]
fn enumerate_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.g6");
    let o = avecc(&["enumerate", "trees", "--n", "10", "--out", path.to_str().unwrap()], "");
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 106);
}

#[test]
fn family_then_invariants() {
    let o = avecc(&["family", "lollipop", "n=12", "k=8"], "");
    assert!(o.status.success());
    let g6 = stdout(&o);
    let o = avecc(&["invariants", "--g6", "-", "--format", "csv"], &g6);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(avecc(&["scan", "--conjecture", "A.478-U", "--class", "trees", "--n", "4..9"], "").status.code(), Some(0));
    assert_eq!(avecc(&["scan", "--conjecture", "A.460-L", "--class", "graphs", "--n", "4..5"], "").status.code(), Some(3));
    assert_eq!(avecc(&["scan", "--conjecture", "nope", "--class", "trees", "--n", "5"], "").status.code(), Some(1));
    assert_eq!(avecc(&["family", "broom", "n=5"], "").status.code(), Some(1));
    assert_eq!(avecc(&["transform", "sigma", "--g6", "Ch", "--bridge", "0,1"], "").status.code(), Some(2));
}

#[test]
fn refutation_report() {
    let o = avecc(&["refute-a100", "--k", "20", "--delta", "20"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"], 1);
    assert_eq!(v["rows"][0]["n"], 422);
    assert_eq!(v["rows"][0]["bfs_agrees"], true);
}

#[test]
fn formulas_agree() {
    let o = avecc(&["formulas", "--family", "broom", "--n", "12", "--delta", "3..10"], "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
