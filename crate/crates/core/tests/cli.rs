use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ccx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccx"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const CUBE3: &str = "ccx 1\ncube 000 001 010 011 100 101 110 111\n";

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_cube() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "cube3.ccx", CUBE3);
    let o = ccx(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "valid cubing: 8 vertices, 12 edges, 6 squares, 1 cube"
    );
}

#[test]
fn check_rejects_hollow_cycle() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "c4.ccx",
        "ccx 1\ncube a b\ncube b c\ncube c d\ncube d a\n",
    );
    let o = ccx(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a cubing"));
    let q = ccx(&["--quiet", "check", s(&f)]);
    assert_eq!(stdout(&q).lines().count(), 1);
}

#[test]
fn classify_edge_swap() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "edge.ccx", "ccx 1\ncube a b\n");
    let m = write(dir.path(), "swap.aut", "aut 1\na -> b\nb -> a\n");
    let o = ccx(&["classify", s(&f), "--map", s(&m)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o).lines().next(),
        Some("inversion along wall 0 at power 1")
    );
}

#[test]
fn classify_after_subdividing() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "edge.ccx", "ccx 1\ncube a b\n");
    let out = dir.path().join("edge2.ccx");
    let o = ccx(&["subdivide", s(&f), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let m = write(
        dir.path(),
        "swap.aut",
        "aut 1\na -> b\nb -> a\na+b -> a+b\n",
    );
    let o = ccx(&["-q", "classify", s(&out), "--map", s(&m)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "elliptic: fixes a+b");
}

#[test]
fn square_rotation_needs_power_two() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "sq.ccx", "ccx 1\ncube a b c d\n");
    let m = write(
        dir.path(),
        "r.aut",
        "aut 1\na -> b\nb -> d\nd -> c\nc -> a\n",
    );
    // power 1 alone sees no inversion, and the rotation has neither a fixed
    // vertex nor an invariant axis
    let o = ccx(&["-q", "classify", s(&f), "--map", s(&m), "--max-power", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "indeterminate");
    let o = ccx(&["-q", "classify", s(&f), "--map", s(&m)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "inversion along wall 0 at power 2");
}

#[test]
fn dist_hyperplanes_geodesic() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "cube3.ccx", CUBE3);
    assert_eq!(stdout(&ccx(&["dist", s(&f), "000", "111"])).trim(), "3");
    assert_eq!(
        stdout(&ccx(&["--format", "tsv", "dist", s(&f), "000", "011"])).trim(),
        "000\t011\t2"
    );
    let h = stdout(&ccx(&["hyperplanes", s(&f)]));
    assert_eq!(
        h.lines()
            .filter(|l| *l == "wall 0: 4 edges, sides 4/4")
            .count(),
        1
    );
    assert_eq!(
        h.lines()
            .filter(|l| l.ends_with("4 edges, sides 4/4"))
            .count(),
        3
    );
    let t = stdout(&ccx(&["--format", "tsv", "hyperplanes", s(&f)]));
    assert!(t.contains("wall\tedges\tside0\tside1\n0\t4\t4\t4"));
    let o = ccx(&["geodesic", s(&f), "000", "001", "011", "111"]);
    assert_eq!(
        (o.status.code(), stdout(&o).lines().next()),
        (Some(0), Some("geodesic"))
    );
    let o = ccx(&["geodesic", s(&f), "000", "001", "000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not-geodesic "));
}

#[test]
fn emit_is_canonical() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "x.ccx",
        "ccx 1\n# a strip\ncube e f b c\ncube a b d e\n",
    );
    let once = stdout(&ccx(&["emit", s(&f)]));
    let g = write(dir.path(), "y.ccx", &once);
    assert_eq!(stdout(&ccx(&["emit", s(&g)])), once);
    assert_eq!(
        stdout(&ccx(&["check", s(&f)])),
        stdout(&ccx(&["check", s(&g)]))
    );
}

#[test]
fn cubulate_writes_complex_and_embedding() {
    let dir = TempDir::new().unwrap();
    let w = write(
        dir.path(),
        "sq.wsp",
        "wsp 1\npoints a b c d\nwall a b | c d\nwall a c | b d\n",
    );
    let (out, emb) = (dir.path().join("sq.ccx"), dir.path().join("sq.map"));
    let o = ccx(&["cubulate", s(&w), "-o", s(&out), "--embedding", s(&emb)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "cubulation: 4 vertices, 4 edges, 1 square"
    );
    let c = ccx(&["check", s(&out)]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&emb)
            .unwrap()
            .lines()
            .filter(|l| l.contains("->"))
            .count(),
        4
    );
}

#[test]
fn demos_exit_zero() {
    let o = ccx(&["demo", "l2", "--window", "6", "--axis", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: pass"));
    let o = ccx(&["-q", "demo", "bs", "--m", "2", "--n", "3", "--radius", "4"]);
    assert_eq!(
        (o.status.code(), stdout(&o).trim()),
        (Some(0), "demo passed")
    );
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(ccx(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ccx(&["dist", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        ccx(&["check", "/nonexistent/file.ccx"]).status.code(),
        Some(2)
    );
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.ccx", "ccx 1\ncube a b c\n");
    let o = ccx(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let g = write(dir.path(), "e.ccx", "ccx 1\ncube a b\n");
    assert_eq!(ccx(&["dist", s(&g), "a", "zz"]).status.code(), Some(2));
    assert_eq!(
        ccx(&["demo", "l2", "--window", "2", "--axis", "5"])
            .status
            .code(),
        Some(2)
    );
}
