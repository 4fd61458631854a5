use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bcpp(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcpp")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn fixtures() -> TempDir {
    let dir = TempDir::new().unwrap();
    write(&dir, "p3.tsv", "a b\nb c\n");
    write(&dir, "ac.txt", "a\nc\n");
    write(&dir, "c4.tsv", "a b\nb c\nc d\nd a\n");
    write(&dir, "parts.txt", "a 0\nb 0\nc 1\nd 1\n");
    write(&dir, "all4.txt", "a\nb\nc\nd\n");
    write(&dir, "one.txt", "a\n");
    dir
}

#[test]
fn exact_on_path() {
    let dir = fixtures();
    let out = bcpp(&["exact", "--graph", "p3.tsv", "--targets", "ac.txt"], dir.path());
    assert_eq!(stdout(&out), "node,centrality\na,0.0000000000\nb,2.000000000\nc,0.0000000000\n");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.starts_with("phase,seconds\n"));
}

#[test]
fn skeleton_matches_exact_bytes() {
    let dir = fixtures();
    let exact = stdout(&bcpp(&["exact", "--graph", "c4.tsv", "--targets", "all4.txt"], dir.path()));
    let skeleton = stdout(&bcpp(
        &["skeleton", "--graph", "c4.tsv", "--targets", "all4.txt", "--partition", "parts.txt"],
        dir.path(),
    ));
    assert_eq!(exact, skeleton);
    let auto =
        stdout(&bcpp(&["skeleton", "--graph", "c4.tsv", "--targets", "all4.txt", "--auto-partition", "2"], dir.path()));
    assert_eq!(exact, auto);
}

#[test]
fn all_on_four_cycle() {
    let dir = fixtures();
    let out = stdout(&bcpp(&["all", "--graph", "c4.tsv", "--partition", "parts.txt"], dir.path()));
    assert_eq!(out, "node,centrality\na,1.000000000\nb,1.000000000\nc,1.000000000\nd,1.000000000\n");
    let halved =
        stdout(&bcpp(&["all", "--graph", "c4.tsv", "--partition", "parts.txt", "--unordered-pairs"], dir.path()));
    assert!(halved.contains("a,0.5000000000\n"));
}

#[test]
fn oracle_and_out_file() {
    let dir = fixtures();
    let out = bcpp(&["oracle", "--graph", "c4.tsv", "--targets", "all4.txt", "--out", "o.csv"], dir.path());
    assert_eq!(stdout(&out), "");
    let text = fs::read_to_string(dir.path().join("o.csv")).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with(",1.000000000")));
}

#[test]
fn skeleton_dump() {
    let dir = fixtures();
    let out = bcpp(
        &[
            "skeleton",
            "--graph",
            "c4.tsv",
            "--targets",
            "ac.txt",
            "--partition",
            "parts.txt",
            "--dump-skeleton",
            "sk.txt",
        ],
        dir.path(),
    );
    stdout(&out);
    let dump = fs::read_to_string(dir.path().join("sk.txt")).unwrap();
    assert_eq!(dump.lines().count(), 5);
}

#[test]
fn exit_codes() {
    let dir = fixtures();
    let missing = bcpp(&["exact", "--graph", "nope.tsv", "--targets", "ac.txt"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
    let no_targets = bcpp(&["exact", "--graph", "p3.tsv"], dir.path());
    assert_eq!(no_targets.status.code(), Some(1));
    let one = bcpp(&["exact", "--graph", "p3.tsv", "--targets", "one.txt"], dir.path());
    assert_eq!(one.status.code(), Some(2));
    let no_partition = bcpp(&["all", "--graph", "c4.tsv"], dir.path());
    assert_eq!(no_partition.status.code(), Some(1));
    let empty_er = bcpp(&["gen", "erdos-renyi", "--n", "0", "--p", "0.5"], dir.path());
    assert_eq!(empty_er.status.code(), Some(2));
    assert_eq!(bcpp(&["--help"], dir.path()).status.code(), Some(0));
    write(&dir, "loop.tsv", "a a 1\n");
    let bad = bcpp(&["exact", "--graph", "loop.tsv", "--targets", "ac.txt"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1"));
}

#[test]
fn gen_is_seeded() {
    let dir = fixtures();
    let args = ["gen", "erdos-renyi", "--n", "30", "--p", "0.2", "--max-weight", "5", "--seed", "7"];
    let a = stdout(&bcpp(&args, dir.path()));
    let b = stdout(&bcpp(&args, dir.path()));
    assert_eq!(a, b);
    let mut other = args;
    other[9] = "8";
    assert_ne!(a, stdout(&bcpp(&other, dir.path())));
}

#[test]
fn gen_planted_with_partition_and_targets() {
    let dir = fixtures();
    let out = bcpp(
        &[
            "gen",
            "planted",
            "--k",
            "2",
            "--size",
            "3",
            "--p-in",
            "1",
            "--p-out",
            "0",
            "--out",
            "g.tsv",
            "--emit-partition",
            "g.parts",
            "--emit-targets",
            "4",
            "--targets-out",
            "g.targets",
        ],
        dir.path(),
    );
    stdout(&out);
    let edges = fs::read_to_string(dir.path().join("g.tsv")).unwrap();
    assert_eq!(edges.lines().count(), 6);
    let parts = fs::read_to_string(dir.path().join("g.parts")).unwrap();
    assert_eq!(parts, "0 0\n1 0\n2 0\n3 1\n4 1\n5 1\n");
    let targets = fs::read_to_string(dir.path().join("g.targets")).unwrap();
    assert_eq!(targets.lines().count(), 4);

    let centrality = stdout(&bcpp(
        &["skeleton", "--graph", "g.tsv", "--targets", "g.targets", "--partition", "g.parts"],
        dir.path(),
    ));
    let exact = stdout(&bcpp(&["exact", "--graph", "g.tsv", "--targets", "g.targets"], dir.path()));
    assert_eq!(centrality, exact);
}

#[test]
fn partition_command() {
    let dir = fixtures();
    let text = stdout(&bcpp(&["partition", "--graph", "c4.tsv", "--k", "2", "--seed", "1"], dir.path()));
    assert_eq!(text.lines().count(), 4);
    write(&dir, "auto.txt", &text);
    stdout(&bcpp(&["all", "--graph", "c4.tsv", "--partition", "auto.txt"], dir.path()));
}

#[test]
fn bench_report() {
    let dir = fixtures();
    let out = stdout(&bcpp(
        &[
            "bench",
            "--graph",
            "c4.tsv",
            "--targets",
            "all4.txt",
            "--partition",
            "parts.txt",
            "--auto-partition",
            "1",
            "--repetitions",
            "3",
        ],
        dir.path(),
    ));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("baseline_min,baseline_median"));
    assert!(lines[0].contains("speedup"));
    assert!(lines[2].starts_with("auto:1,1,"));
    assert!(lines[1].ends_with(",0.0000000000"));
}

#[test]
fn threads_do_not_change_output() {
    let dir = fixtures();
    let base = ["skeleton", "--graph", "c4.tsv", "--targets", "all4.txt", "--partition", "parts.txt"];
    let one = stdout(&bcpp(&[&base[..], &["--threads", "1"]].concat(), dir.path()));
    let four = stdout(&bcpp(&[&base[..], &["--threads", "4"]].concat(), dir.path()));
    assert_eq!(one, four);
}
