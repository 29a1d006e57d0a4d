use std::process::{Command, Output};

use selfdual::planar_map::JsonMap;
use selfdual::verify::isomorphic;
use selfdual::AbstractGraph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_s_as_graph6() {
    let o = run(&["construct", "s", "--x", "7", "--y", "5", "--format", "graph6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = AbstractGraph::from_graph6(text.trim()).unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(g.degree_sequence().to_string(), "7,5,3^8");
}

#[test]
fn json_map_round_trip_and_self_duality() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "p-of-t", "--tuple", "6,5,6", "--out", p]);
    assert!(o.status.success());
    let json: JsonMap = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let map = json.to_map().unwrap();
    let direct = selfdual::constructions::algorithm_one(&"6,5,6".parse().unwrap()).unwrap();
    assert!(isomorphic(&map.underlying(), &direct.polyhedron.underlying()).is_some());

    let report = dir.path().join("r.json");
    let o = run(&["verify", "--self-dual", "--file", p, "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("self-dual: yes"));
    assert_eq!(out.lines().count(), 1 + map.num_vertices());
    let r: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(r["passed"], true);
}

#[test]
fn q_is_reported_not_self_dual() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.txt");
    let o = run(&["construct", "q", "--x", "6", "--y", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["verify", "--self-dual", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "self-dual: no");
}

#[test]
fn enumerate_counts_one_class() {
    let o = run(&["enumerate", "--sequence", "4,4,3,3,3,3", "--self-dual"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("count 1"));
}

#[test]
fn lemma_and_phi() {
    let o = run(&["verify", "--lemma-leaf", "--tuple", "6,5,6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass"));
    let o = run(&["verify", "--phi", "--tuple", "7,4,4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fingerprints() {
    let o = run(&["fingerprint", "--hplus", "--radial", "--tuple", "6,6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[n=2 m=1 deg=1,1 ends=2] [n=2 m=1 deg=1,1 ends=2]");
    let o = run(&["fingerprint", "--h3", "--tuple", "4,4,4"]);
    assert_eq!(stdout(&o).trim(), "[n=2 m=1 deg=1,1 ends=2] [n=2 m=1 deg=1,1 ends=2]");
}

#[test]
fn argument_errors_exit_2() {
    for args in [
        &["construct", "gp"][..],
        &["construct", "s", "--x", "3", "--y", "5"],
        &["construct", "p-of-t", "--tuple", "6,2"],
        &["verify", "--phi"],
        &["verify", "--self-dual", "--phi", "--tuple", "6,6"],
        &["enumerate", "--sequence", "3^14"],
        &["suite", "--criterion", "12"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dot_output_is_stable() {
    let a = stdout(&run(&["construct", "gp", "--p", "8", "--format", "dot"]));
    let b = stdout(&run(&["construct", "gp", "--p", "8", "--format", "dot"]));
    assert_eq!(a, b);
    assert!(a.starts_with("graph polyhedron {"));
    assert_eq!(a.matches(" -- ").count(), 14);
}

#[test]
fn single_suite_criterion() {
    let o = run(&["suite", "--criterion", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS [6]"));
}

#[test]
fn non_polyhedral_input_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "a: b d\nb: c a\nc: d b\nd: a c\n").unwrap();
    let o = run(&["verify", "--self-dual", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
