use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn sombor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sombor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn index_of_triangle() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "c3.txt", "# triangle\n3 3\n0 1\n1 2\n2 0\n");
    let out = sombor(&["index", &file]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8.485281374\n");
}

#[test]
fn malformed_file_reports_line() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.txt", "3 3\n0 1\n1 1\n2 0\n");
    let out = sombor(&["index", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let out = sombor(&["index", &dir.path().join("missing.txt").to_string_lossy()]);
    assert!(!out.status.success());
}

#[test]
fn extremal_value_and_graph() {
    let out = sombor(&["extremal", "--n", "6", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "22.60400859\n");

    let out = sombor(&["extremal", "--n", "6", "--k", "2", "--emit-graph"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("22.60400859"));
    assert_eq!(lines.next(), Some("6 6"));
    let mut degree = [0usize; 6];
    for line in lines {
        for v in line.split_whitespace() {
            degree[v.parse::<usize>().unwrap()] += 1;
        }
    }
    assert_eq!(degree.iter().sum::<usize>(), 12);
    assert_eq!(degree.iter().filter(|&&d| d == 4).count(), 1);
}

#[test]
fn extremal_rejects_bad_parameters() {
    for (n, k) in [("5", "3"), ("6", "0")] {
        let out = sombor(&["extremal", "--n", n, "--k", k]);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr(&out).contains("N ≥ k+3, k ≥ 1"), "{}", stderr(&out));
    }
}

#[test]
fn verify_table_and_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("v.csv");
    let out = sombor(&["verify", "--n-max", "5", "--csv", csv.to_str().unwrap()]);
    // 𝒢(5,1) is beaten by C4 with a pendant, so the run fails
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("13.20180734"));
    assert!(text.contains("2 of 3 classes"));

    let rows = fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = rows.lines().collect();
    assert_eq!(rows[0], "N,k,classSize,maxValue,numMaximizers,matchesExtremal,runnerUpGap,runtimeMs");
    assert!(rows[1].starts_with("4,1,1,13.20180734,1,true,,"));
    assert!(rows[2].starts_with("5,1,2,16.03023446,1,false,"));
    assert_eq!(rows.len(), 4);

    let only_4 = sombor(&["verify", "--n-max", "4"]);
    assert!(only_4.status.success());
}

#[test]
fn verify_output_is_deterministic() {
    let a = sombor(&["--threads", "1", "verify", "--n-max", "7"]);
    let b = sombor(&["--threads", "2", "verify", "--n-max", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!sombor(&["verify", "--n-max", "11"]).status.success());
}

#[test]
fn ascend_reports_trace_and_verdict() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "g.txt", "6 6\n0 1\n1 2\n2 0\n0 3\n3 4\n1 5\n");
    let trace = dir.path().join("trace.txt");
    let out = sombor(&["ascend", &file, "--trace", trace.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("steps 1\n1 HubConsolidate "), "{text}");
    assert!(text.ends_with("isomorphic to 𝒢(6,2): yes\n"));
    assert!(text.starts_with(&fs::read_to_string(&trace).unwrap()));
}

#[test]
fn ascend_stuck_and_invalid_inputs() {
    let dir = TempDir::new().unwrap();
    let c4_pendant = write(&dir, "c4p.txt", "5 5\n0 1\n1 2\n2 3\n3 0\n0 4\n");
    let out = sombor(&["ascend", &c4_pendant]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("isomorphic to 𝒢(5,1): no"));

    let cycle = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(sombor(&["ascend", &cycle]).status.code(), Some(2));

    let tree = write(&dir, "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(sombor(&["ascend", &tree]).status.code(), Some(2));
}

#[test]
fn check_lemmas_sweep() {
    let out = sombor(&["check-lemmas", "--range", "30"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.contains(" 0 counterexamples")));
    assert!(text.contains("inequality (c,d): 841 cases, 0 counterexamples, 57 equal"));
    assert_eq!(sombor(&["check-lemmas", "--range", "1"]).status.code(), Some(2));
}

#[test]
fn enumerate_streams_edge_lists() {
    let out = sombor(&["enumerate", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.split("\n\n").count(), 13);
    let with_k = stdout(&sombor(&["enumerate", "--n", "5", "--k", "1"]));
    assert_eq!(with_k.split("\n\n").count(), 2);
    assert!(with_k.split("\n\n").all(|block| block.starts_with("5 5\n")));
    assert!(!sombor(&["enumerate", "--n", "2"]).status.success());
}

#[test]
fn enumerated_graphs_parse_back() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&sombor(&["enumerate", "--n", "4"]));
    for (i, block) in text.split("\n\n").enumerate() {
        let file = write(&dir, &format!("g{i}.txt"), block);
        assert!(Path::new(&file).exists());
        assert!(sombor(&["index", &file]).status.success());
    }
}

#[test]
fn unknown_subcommand_fails() {
    assert!(!sombor(&["frobnicate"]).status.success());
    assert!(!sombor(&[]).status.success());
}
