use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctrl-backbone")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn zfs_backbone_of_small_graphs() {
    let p3 = fixture("path3.txt");
    assert!(stdout(&["zfs-backbone", "--graph", path_str(&p3)]).starts_with("zeta=3 edges=2"));
    let k3 = fixture("triangle.txt");
    assert!(stdout(&["zfs-backbone", "--graph", path_str(&k3)]).starts_with("zeta=1 edges=0"));
    // leaders on the command line override the file
    let two = stdout(&["zfs-backbone", "--graph", path_str(&k3), "--leaders", "0,1", "--exhaustive"]);
    assert!(two.starts_with("zeta=3 edges=1"), "{two}");
}

#[test]
fn dist_backbone_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.txt");
    let dot = dir.path().join("b.dot");
    let g = fixture("five_node_two_leaders.txt");
    let text = stdout(&[
        "dist-backbone",
        "--graph",
        path_str(&g),
        "--out",
        path_str(&out),
        "--dot",
        path_str(&dot),
    ]);
    assert_eq!(text.trim(), "delta=4 edges=2 bound_lower=2 bound_upper=4");
    let backbone = ctrl_backbone::io::parse_backbone(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(backbone.len(), 2);
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(dot.matches("color=red").count(), 2);
}

#[test]
fn bounds_line() {
    let g = fixture("eight_node_two_leaders.txt");
    let text = stdout(&["bounds", "--graph", path_str(&g), "--trials", "5"]);
    assert!(text.contains("zeta=2 delta=6"), "{text}");
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = fixture("path3.txt");
    let text = stdout(&["verify", "--graph", path_str(&p3), "--trials", "5"]);
    assert!(text.contains("violations=0"), "{text}");

    // drop an edge from the backbone: preservation must fail with exit 2
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# backbone kind=zfs preserved_bound=3\n3 1\n0 1\nleaders: 0\n").unwrap();
    let out = run(&["verify", "--graph", path_str(&p3), "--backbone", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("violation: zfs backbone preservation"));
}

#[test]
fn gen_then_analyse() {
    let dir = tempfile::tempdir().unwrap();
    let txt = dir.path().join("g.txt");
    let json = dir.path().join("g.json");
    stdout(&["gen", "--n", "20", "--p", "0.2", "--seed", "3", "--leaders", "4", "--out", path_str(&txt)]);
    stdout(&["gen", "--n", "20", "--p", "0.2", "--seed", "3", "--leaders", "4", "--json", "--out", path_str(&json)]);
    let a = stdout(&["bounds", "--graph", path_str(&txt), "--trials", "3"]);
    let b = stdout(&["bounds", "--graph", path_str(&json), "--trials", "3"]);
    assert_eq!(a, b);
    assert!(a.starts_with("n=20 m=4"));
}

#[test]
fn experiment_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    stdout(&["experiment", "--config", path_str(&fixture("experiment_small.json")), "--out", path_str(&csv)]);
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows = ctrl_backbone::io::parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 20);
    assert!(text.starts_with(ctrl_backbone::io::CSV_HEADER));

    // with p = 0 every graph is edgeless, so every bound equals m
    let cfg = dir.path().join("empty.json");
    std::fs::write(&cfg, r#"{"n": 10, "m": 3, "p_grid": [0.0], "graphs_per_p": 4, "oracle_trials": 2}"#).unwrap();
    let text = stdout(&["experiment", "--config", path_str(&cfg)]);
    for r in ctrl_backbone::io::parse_csv(&text).unwrap() {
        assert_eq!((r.zeta, r.delta, r.e_bz, r.e_bd, r.min_sampled_rank), (3, 3, 0, 0, 3));
    }
}

#[test]
fn bad_input_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("loop.txt");
    std::fs::write(&g, "2 1\n1 1\nleaders: 0\n").unwrap();
    let out = run(&["zfs-backbone", "--graph", path_str(&g)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));
    let out = run(&["zfs-backbone", "--graph", path_str(&fixture("path3.txt")), "--leaders", "7"]);
    assert_eq!(out.status.code(), Some(1));
}
