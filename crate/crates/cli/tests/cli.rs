use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stairdec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counts_the_diamond() {
    let o = run(&["decompose-graph", &fixture("diamond.sg"), "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn verified_count() {
    let o = run(&["count", &fixture("diamond.sg"), "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "phi=2 enum=2 ok\n");
}

#[test]
fn three_dimensional_games() {
    let o = run(&["games", "--size", "3", "--dim", "3", "--count-only"]);
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn json_is_compact_sorted_and_deterministic() {
    let a = run(&["decompose-graph", &fixture("diamond.sg"), "--json", "-"]);
    let b = run(&["decompose-graph", &fixture("diamond.sg"), "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "[[[\"b\",\"l\",\"r\",\"t\"],[\"l\",\"r\",\"t\"],[\"t\"]],[[\"b\",\"l\",\"r\",\"t\"],[\"l\",\"t\"],[\"r\",\"t\"]]]\n"
    );
    let c = run(&["canonicalize", &fixture("zero_node.sg"), "--json", "-"]);
    assert_eq!(
        stdout(&c),
        "{\"graph\":{\"edges\":[[\"a\",\"b\"]],\"nodes\":{\"a\":1,\"b\":2}},\"map\":{\"a\":\"a\",\"b\":\"b\",\"c\":\"b\",\"z\":null}}\n"
    );
}

#[test]
fn json_to_a_file() {
    let dir = std::env::temp_dir().join(format!("stairdec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let o = run(&["decompose-set", &fixture("diamond_staircase.ss"), "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn stats_report_the_bound() {
    let o = run(&["decompose-graph", &fixture("six_nodes.sg"), "--stats", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| !l.starts_with("stats") && !l.starts_with("oracle")).count(), 4);
    assert!(text.lines().filter(|l| l.starts_with("stats")).all(|l| l.ends_with("PASS")));
    assert!(text.contains("oracle=4 ok"));
}

#[test]
fn staircase_commands() {
    let o = run(&["set-to-canonical-graph", &fixture("four_dim.ss")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("node")).count(), 5);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("edge")).count(), 6);

    let o = run(&["decompose-set", &fixture("stacked_staircase.ss"), "--count-only", "--verify"]);
    assert_eq!(stdout(&o), "4\noracle=4 ok\n");

    let o = run(&["c4-sum", &fixture("column.ss"), &fixture("column.ss")]);
    assert_eq!(stdout(&o), "dim 2\ncorner 0 6\ncorner 1 0\n");

    let o = run(&["set-to-graph", &fixture("two_by_two.ss")]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("node")).count(), 4);
}

#[test]
fn graph_to_set_round_trips_through_files() {
    let dir = std::env::temp_dir().join(format!("stairdec-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let closed = dir.join("closed.sg");
    let o = run(&["closure", &fixture("shortcut_chain.sg")]);
    std::fs::write(&closed, &o.stdout).unwrap();
    let o = run(&["graph-to-set", closed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let set = dir.join("set.ss");
    std::fs::write(&set, &o.stdout).unwrap();
    let o = run(&["set-to-canonical-graph", set.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("edge")).count(), 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn equivalence_table() {
    let o = run(&["equiv", &fixture("two_points.sg"), "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn augmentation_names_the_new_node() {
    let o = run(&["augment", &fixture("two_points.sg")]);
    assert!(stdout(&o).contains("node __max 2"));
    assert!(stdout(&o).ends_with("# added __max\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["games", "--size", "0", "--dim", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let o = run(&["decompose-graph", &fixture("bad_syntax.sg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(&["graph-to-set", &fixture("shortcut_chain.sg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not transitive"));

    let o = run(&["decompose-set", &fixture("infinite.ss")]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(run(&["count", "/no/such/file.sg"]).status.code(), Some(2));

    let o = run(&["decompose-graph", &fixture("not_standard.sg"), "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn selfcheck_passes() {
    let o = run(&["selfcheck"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
