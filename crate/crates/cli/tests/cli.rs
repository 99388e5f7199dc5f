//! End-to-end tests of the binary: exit codes, JSON shapes, determinism,
//! and the decompose -> verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_friendly-split"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_file(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("friendly-split-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn decompose_k5_json_shape_and_exit_zero() {
    let out = run(&["decompose", "--gen", "complete:5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["properties"], "pass");
    assert_eq!(doc["A"].as_array().unwrap().len(), 2);
    assert_eq!(doc["B"].as_array().unwrap().len(), 2);
    assert_eq!(doc["C"].as_array().unwrap().len(), 1);
}

#[test]
fn decompose_petersen_has_empty_c_and_good_cut() {
    let out = run(&["decompose", "--gen", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["C"].as_array().unwrap().is_empty());
    assert!(doc["cut"].as_u64().unwrap() >= 10);
}

#[test]
fn decompose_rejects_disconnected_with_exit_2() {
    let path = tmp_file("disconnected.txt", "0 1\n2 3\n");
    let out = run(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("not connected"), "{err}");
}

#[test]
fn decompose_parse_failure_is_exit_2() {
    let path = tmp_file("bad.txt", "0 x\n");
    let out = run(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "decompose",
        "--gen",
        "gnp:10:0.4",
        "--seed",
        "3",
        "--init",
        "random",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn decompose_output_round_trips_through_verify() {
    let out = run(&["decompose", "--gen", "frucht", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let path = tmp_file("frucht-partition.json", &stdout(&out));
    let verify = run(&[
        "verify",
        "--gen",
        "frucht",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
}

#[test]
fn verify_rejects_bad_split_with_exit_1_and_witness() {
    let path = tmp_file("bad-split.txt", "0 A\n1 A\n2 A\n3 B\n4 B\n");
    let out = run(&[
        "verify",
        "--gen",
        "complete:5",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], false);
    assert!(!doc["majority_a"]["witnesses"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn verify_partition_must_cover_vertices() {
    let path = tmp_file("partial.txt", "0 A\n1 B\n");
    let out = run(&[
        "verify",
        "--gen",
        "complete:3",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_friendship_canonical_split_passes() {
    let path = tmp_file(
        "friendship.txt",
        "# center balanced\n0 C\n1 A\n3 A\n5 A\n2 B\n4 B\n6 B\n",
    );
    let out = run(&[
        "verify",
        "--gen",
        "friendship:3",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dimacs_input_is_autodetected() {
    let path = tmp_file(
        "triangle.dimacs",
        "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n",
    );
    let out = run(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["properties"], "pass");
    let total = doc["A"].as_array().unwrap().len()
        + doc["B"].as_array().unwrap().len()
        + doc["C"].as_array().unwrap().len();
    assert_eq!(total, 3);
}

#[test]
fn oracle_maxcut_cycle5() {
    let out = run(&["oracle", "maxcut", "--gen", "cycle:5"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["maxcut"], 4);
}

#[test]
fn oracle_enumerate_k3_counts_six() {
    let out = run(&["oracle", "enumerate", "--gen", "complete:3"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], 6);
    assert_eq!(doc["decompositions"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_cap_exceeded_is_exit_2() {
    let out = run(&["oracle", "maxcut", "--gen", "thomassen32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_round_matches_exact_expectation_field() {
    let config = tmp_file("config.json", r#"["0/1","1/2"]"#);
    let out = run(&[
        "oracle",
        "round",
        "--gen",
        "path:2",
        "--config",
        config.to_str().unwrap(),
        "--samples",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["mean"], 1.0);
    assert_eq!(doc["exact_expected"], "1/1");
}

#[test]
fn gen_friendship_emits_nine_edges() {
    let out = run(&["gen", "friendship:3", "--format", "edgelist"]);
    assert_eq!(stdout(&out).lines().count(), 9);
    let dimacs = run(&["gen", "friendship:3", "--format", "dimacs"]);
    assert!(stdout(&dimacs).starts_with("p edge 7 9\n"));
}

#[test]
fn dot_output_colors_the_three_sets() {
    let out = run(&["decompose", "--gen", "complete:5", "--format", "dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph friendly_split {"));
    assert!(text.contains("fillcolor=red"));
    assert!(text.contains("fillcolor=blue"));
    assert!(text.contains("fillcolor=green"));
    assert!(text.contains("0 -- 1;"));
}

#[test]
fn trace_file_is_json_lines_with_initial_record() {
    let path = std::env::temp_dir().join(format!("fs-trace-{}.jsonl", std::process::id()));
    let out = run(&[
        "decompose",
        "--gen",
        "complete:4",
        "--trace",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["kind"], "initial");
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["energy"].as_str().unwrap().contains('/'));
    }
}

#[test]
fn compare_emits_csv_with_all_methods() {
    let out = bin()
        .args(["compare", "--gen", "cycle:6", "--seeds", "0,1"])
        .env("FRIENDLY_SPLIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph,n,m,method,seed,cut,bound,maxcut,wall_ms"
    );
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 4);
    assert!(body.iter().any(|l| l.contains("engine-decomposition")));
    assert!(body.iter().any(|l| l.contains("oracle-maxcut")));
}

#[test]
fn init_cut_file_drives_the_run() {
    let cut = tmp_file("cut.txt", "0 A\n1 A\n3 A\n5 A\n2 B\n4 B\n6 B\n");
    let out = run(&[
        "decompose",
        "--gen",
        "friendship:3",
        "--init",
        &format!("cut:{}", cut.to_str().unwrap()),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["C"], serde_json::json!([0]), "center lands in C");

    // A cut file with C entries is rejected.
    let bad = tmp_file("cut-with-c.txt", "0 C\n1 A\n2 B\n3 A\n4 B\n5 A\n6 B\n");
    let out = run(&[
        "decompose",
        "--gen",
        "friendship:3",
        "--init",
        &format!("cut:{}", bad.to_str().unwrap()),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
