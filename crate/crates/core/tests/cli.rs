use std::path::Path;
use std::process::{Command, Output};

use subiso::graph::io::{parse_embedding, read_graph_file};
use subiso::graph::verify_embedding;

fn subiso(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subiso")).args(args).current_dir(dir).output().expect("run subiso")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

// triangle plus a pendant; a P3 embeds, a K4 does not
const HOST: &str = "p si 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
const P3: &str = "p si 3 2\ne 1 2\ne 2 3\n";
const C4: &str = "p si 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
const K4: &str = "p si 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "g", HOST);
    write(d, "p3", P3);
    write(d, "k4", K4);
    write(d, "c4", C4);
    let yes = subiso(&["solve", "--host", "g", "--pattern", "p3", "--algo", "oracle", "--witness", "w"], d);
    assert_eq!(code(&yes), 0, "{}", String::from_utf8_lossy(&yes.stderr));
    assert!(String::from_utf8_lossy(&yes.stdout).starts_with("yes"));
    assert!(d.join("w").exists());
    assert_eq!(code(&subiso(&["solve", "--host", "g", "--pattern", "k4", "--algo", "nd"], d)), 1);
    // same edge count, so the search has to run and a budget of one step cannot finish
    let unknown = subiso(&["solve", "--host", "g", "--pattern", "c4", "--algo", "oracle", "--budget", "1"], d);
    assert_eq!(code(&unknown), 2);
    // host is not P4-free
    assert_eq!(code(&subiso(&["solve", "--host", "g", "--pattern", "p3", "--algo", "p4free"], d)), 3);
    assert_eq!(code(&subiso(&["solve", "--host", "missing", "--pattern", "p3"], d)), 3);
    assert_eq!(code(&subiso(&["solve", "--bogus"], d)), 3);
    assert_eq!(code(&subiso(&["--help"], d)), 0);
}

#[test]
fn solve_json_reports_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "g", HOST);
    write(d, "p3", P3);
    let o = subiso(&["solve", "--host", "g", "--pattern", "p3", "--algo", "hitting", "--seed", "5", "--json"], d);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["algorithm"], "hitting");
    assert_eq!(v["embedding"].as_array().unwrap().len(), 3);
}

#[test]
fn forbidden_minor_dispatch() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "g", HOST);
    write(d, "p3", P3);
    let o = subiso(&["solve", "--host", "g", "--pattern", "p3", "--forbidden", "7"], d);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("NP-hard"));
}

#[test]
fn recognize_classes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "g", HOST);
    write(d, "p3", P3);
    assert_eq!(code(&subiso(&["recognize", "--graph", "p3", "--class", "p4free"], d)), 0);
    assert_eq!(code(&subiso(&["recognize", "--graph", "g", "--class", "p4free"], d)), 1);
    let o = subiso(&["recognize", "--graph", "g", "--class", "hitting", "--param", "1"], d);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("hitting set"));
    let o = subiso(&["recognize", "--graph", "g", "--class", "nd"], d);
    assert!(String::from_utf8_lossy(&o.stdout).contains("neighborhood diversity: 3"));
}

#[test]
fn reduce_writes_instance_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "x3c", "6\n0 1 2\n3 4 5\n1 2 3\n");
    let o = subiso(&["reduce", "--from", "x3c", "--input", "x3c", "--out-host", "h", "--out-pattern", "p", "--witness", "w"], d);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let g = read_graph_file(&d.join("h")).unwrap();
    let q = read_graph_file(&d.join("p")).unwrap();
    let w = parse_embedding(&std::fs::read_to_string(d.join("w")).unwrap()).unwrap();
    assert!(verify_embedding(&q, &g, &w));
    write(d, "tp", "15\n4 5 6\n4 4 7\n");
    let o = subiso(&["reduce", "--from", "3partition", "--input", "tp", "--out-host", "h", "--out-pattern", "p", "--mode", "cluster"], d);
    assert_eq!(code(&o), 0);
}

#[test]
fn gen_then_bench() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = subiso(&["gen", "--class", "nd:3", "--size", "8", "--count", "4", "--planted", "--out", "c", "--seed", "3"], d);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_dir(d.join("c")).unwrap().count(), 8);
    let a = subiso(&["bench", "--corpus", "c", "--algos", "nd,oracle", "--json"], d);
    let b = subiso(&["bench", "--corpus", "c", "--algos", "nd,oracle", "--json"], d);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["rows"].as_array().unwrap().len(), 8);
    assert_eq!(code(&subiso(&["gen", "--class", "vi:0", "--size", "8", "--out", "c"], d)), 3);
}
