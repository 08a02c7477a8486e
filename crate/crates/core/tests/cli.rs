use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddcover"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .env_remove("ODDCOVER_SEED")
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], dir: &Path, input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .current_dir(dir)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn graph_file(dir: &TempDir, kind: &str, n: usize) -> PathBuf {
    let o = run(&["graph", kind, &n.to_string()], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join(format!("{kind}{n}.edges"));
    std::fs::write(&path, &o.stdout).unwrap();
    path
}

#[test]
fn construct_pipes_into_verify() {
    let dir = TempDir::new().unwrap();
    let k5 = graph_file(&dir, "complete", 5);
    let cover = run(&["construct", "odd-clique", "2"], dir.path());
    assert_eq!(cover.status.code(), Some(0));
    let v = run_stdin(
        &["verify", "--graph", k5.to_str().unwrap()],
        dir.path(),
        &cover.stdout,
    );
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn invalid_cover_lists_violations() {
    let dir = TempDir::new().unwrap();
    let k3 = graph_file(&dir, "complete", 3);
    std::fs::write(
        dir.path().join("one.json"),
        r#"{"n":3,"bicliques":[{"x":[0],"y":[1]}]}"#,
    )
    .unwrap();
    let o = run(
        &[
            "verify",
            "--graph",
            k3.to_str().unwrap(),
            "--cover",
            "one.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("edge 0 2"), "{text}");
    assert!(text.contains("edge 1 2"), "{text}");
}

#[test]
fn pairs_cover_is_perfect() {
    let dir = TempDir::new().unwrap();
    let o = run(
        &[
            "construct",
            "pairs-18mod24",
            "42",
            "--out",
            "c.json",
            "--graph-out",
            "K42.edges",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v = run(
        &[
            "verify",
            "--perfect",
            "--graph",
            "K42.edges",
            "--cover",
            "c.json",
        ],
        dir.path(),
    );
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn every_construction_round_trips() {
    let dir = TempDir::new().unwrap();
    let c5 = graph_file(&dir, "cycle", 5);
    run(
        &["construct", "tomon", "2", "--out", "base.json"],
        dir.path(),
    );
    let cases: Vec<Vec<&str>> = vec![
        vec!["double", c5.to_str().unwrap()],
        vec!["odd-clique", "3"],
        vec!["odd-clique-union", "1", "2", "4"],
        vec!["even-cycle", "4"],
        vec!["cycle-union", "1,3", "2"],
        vec!["cycle-union", "2"],
        vec!["pairs-18mod24", "18"],
        vec!["pairs-6mod24", "30"],
        vec!["tomon", "3"],
        vec!["field-lift", "3", "2", "2", "base.json"],
    ];
    for case in cases {
        let mut args = vec!["construct"];
        args.extend(&case);
        args.extend(["--out", "c.json", "--graph-out", "g.edges"]);
        let o = run(&args, dir.path());
        assert_eq!(
            o.status.code(),
            Some(0),
            "{case:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let v = run(
            &["verify", "--graph", "g.edges", "--cover", "c.json"],
            dir.path(),
        );
        assert_eq!(v.status.code(), Some(0), "{case:?}: {}", stdout(&v));
    }
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("bad.edges"), "n 3\n0 1\n1 1\n").unwrap();
    let o = run(&["rank", "--graph", "bad.edges"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let k3 = graph_file(&dir, "complete", 3);
    std::fs::write(dir.path().join("bad.json"), "{\"n\": 3, \"bicliques\": [}").unwrap();
    let o = run(
        &[
            "verify",
            "--graph",
            k3.to_str().unwrap(),
            "--cover",
            "bad.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(3));
    assert_eq!(
        run(&["construct", "odd-clique"], dir.path()).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["construct", "pairs-18mod24", "20"], dir.path())
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn rank_and_even_cores() {
    let dir = TempDir::new().unwrap();
    let c5 = graph_file(&dir, "cycle", 5);
    let o = run(
        &["rank", "--graph", c5.to_str().unwrap(), "--twins"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("rank 4\n")
            && text.contains("rank_via_twins 4\n")
            && text.contains("lower_bound 3\n"),
        "{text}"
    );

    let o = run(&["even-cores", "--graph", c5.to_str().unwrap()], dir.path());
    assert_eq!(stdout(&o), "dimension 1\n0 1 2 3 4\n");

    let empty = graph_file(&dir, "empty", 4);
    let o = run(
        &[
            "even-cores",
            "--graph",
            empty.to_str().unwrap(),
            "--cap",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_writes_witness_files() {
    let dir = TempDir::new().unwrap();
    let k5 = graph_file(&dir, "complete", 5);
    let o = run(
        &[
            "search",
            "--graph",
            k5.to_str().unwrap(),
            "--threads",
            "2",
            "--out",
            "w.json",
            "--labels",
            "w.txt",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("b2 3\n"));
    let v = run(
        &[
            "verify",
            "--graph",
            k5.to_str().unwrap(),
            "--cover",
            "w.json",
        ],
        dir.path(),
    );
    assert_eq!(v.status.code(), Some(0));
    let labels = std::fs::read_to_string(dir.path().join("w.txt")).unwrap();
    assert_eq!(labels.lines().count(), 5);

    let o = run(
        &["search", "--graph", k5.to_str().unwrap(), "--max-k", "2"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn pairs_search_exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        run(&["pairs-search", "--n", "12"], dir.path())
            .status
            .code(),
        Some(1)
    );
    let o = run(
        &["pairs-search", "--n", "8", "--budget-seconds", "10"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn props_is_seeded() {
    let dir = TempDir::new().unwrap();
    run(
        &[
            "construct",
            "pairs-18mod24",
            "18",
            "--out",
            "c.json",
            "--graph-out",
            "g.edges",
        ],
        dir.path(),
    );
    let args = [
        "props",
        "--graph",
        "g.edges",
        "--cover",
        "c.json",
        "--samples",
        "300",
        "--json",
    ];
    let a = run(&args, dir.path());
    let b = run(&args, dir.path());
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["perfect"], true);
    assert_eq!(json["same_type_canonical_pairing"], true);

    let env = bin()
        .args([
            "props",
            "--graph",
            "g.edges",
            "--cover",
            "c.json",
            "--samples",
            "300",
        ])
        .current_dir(dir.path())
        .env("ODDCOVER_SEED", "9")
        .output()
        .unwrap();
    let flag = run(
        &[
            "props",
            "--graph",
            "g.edges",
            "--cover",
            "c.json",
            "--samples",
            "300",
            "--seed",
            "9",
        ],
        dir.path(),
    );
    assert_eq!(env.stdout, flag.stdout);
}
