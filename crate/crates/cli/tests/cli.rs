use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> String {
    root().join("data").join(name).display().to_string()
}

fn catalog_dir() -> String {
    root().join("catalog").display().to_string()
}

fn mvd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mvd-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn solve_compose_worked_example() {
    let o = mvd(&["solve", "--method", "compose", "--catalog", &catalog_dir(), &data("worked17.mvdg")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("### CutVertices and Blocks  ###"));
    assert!(out.contains("cutVerticesSet:[{'H'}]"));
    assert!(out.contains("[{'I'}, {'M'}, {'D'}, {'O'}, {'C'}, {'L'}, {'Q'}, {'B'}, {'H'}]"));
    assert!(out.contains("1\t9\t2\tcatalog:graph_9Vertex-11"));
    assert!(out.contains("2\t9\t2\tcatalog:graph_9Vertex-9"));
    assert!(out.contains("mvd = 3 (method: compose)"));
    assert!(out.contains("### Coloring Vertices Results ###"));
}

#[test]
fn verify_exit_codes() {
    let ok = mvd(&["verify", &data("c5.mvdg"), "a:1,b:2,c:1,d:2,e:1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("2 colors"));
    let bad = mvd(&["verify", &data("c5.mvdg"), "a:1,b:2,c:3,d:1,e:2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("no monochromatic cut separates b and d"));
    let missing = mvd(&["verify", &data("c5.mvdg"), "a:1,b:2"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn parse_and_disconnected_errors() {
    let dir = scratch("errors");
    let broken = write(&dir, "broken.txt", "a, b, c\n0, 1, 0\n1, 0, 1\n");
    let o = mvd(&["blocks", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
    let split = write(&dir, "split.mvdg", "vertices: a,b,c,d\nedges: a-b,c-d\n");
    let o = mvd(&["solve", "--method", "exact", &split]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("{a,b}") && stderr(&o).contains("{c,d}"), "{}", stderr(&o));
    let o = mvd(&["solve", &dir.join("nope.mvdg").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn capacity_and_partial() {
    let o = mvd(&["solve", "--method", "exact", &data("worked17.mvdg")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("capacity exceeded"));
    let empty = scratch("empty-catalog");
    let empty = empty.display().to_string();
    let o = mvd(&["solve", "--method", "compose", "--cap", "5", "--catalog", &empty, &data("worked17.mvdg")]);
    assert_eq!(o.status.code(), Some(3));
    let o = mvd(&[
        "solve",
        "--method",
        "compose",
        "--cap",
        "5",
        "--catalog",
        &empty,
        "--partial",
        &data("worked17.mvdg"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("1 <= mvd <= "), "{}", stdout(&o));
    let o = mvd(&["solve", "--cap", "0", &data("c5.mvdg")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_lines_round_trip() {
    let o = mvd(&["solve", "--format", "json-lines", "--catalog", &catalog_dir(), &data("worked17.mvdg")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let last = stdout(&o).lines().last().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(v["type"], "result");
    assert_eq!(v["value"], 3);
    let coloring = v["coloring"].as_str().unwrap();
    let check = mvd(&["verify", &data("worked17.mvdg"), coloring]);
    assert_eq!(check.status.code(), Some(0), "{}", stderr(&check));
}

#[test]
fn gen_then_auto_matches_exact() {
    let dir = scratch("gen");
    for (family, params) in [
        ("wheel", vec!["7"]),
        ("theta", vec!["3", "1", "1"]),
        ("grid", vec!["2", "4"]),
        ("kminus", vec!["6", "g4"]),
        ("petersen", vec![]),
        ("multipartite", vec!["1", "2", "3"]),
    ] {
        let file = dir.join(format!("{family}.mvdg")).display().to_string();
        let mut args = vec!["gen", family];
        args.extend(params.iter().copied());
        args.extend(["-o", file.as_str()]);
        assert_eq!(mvd(&args).status.code(), Some(0));
        let value = |method: &str| {
            let o = mvd(&["solve", "--method", method, "--format", "json-lines", "--catalog", &catalog_dir(), &file]);
            assert_eq!(o.status.code(), Some(0), "{family}: {}", stderr(&o));
            let last = stdout(&o).lines().last().unwrap().to_string();
            serde_json::from_str::<serde_json::Value>(&last).unwrap()["value"].as_u64().unwrap()
        };
        assert_eq!(value("auto"), value("exact"), "{family}");
    }
    let o = mvd(&["gen", "theta", "1", "1", "1"]);
    assert!(stdout(&o).starts_with("vertices: u,v,p1_1,p2_1,p3_1"), "{}", stdout(&o));
    assert_eq!(mvd(&["gen", "cycle", "2"]).status.code(), Some(2));
}

#[test]
fn formulas() {
    let run = |args: &[&str]| stdout(&mvd(args)).trim().to_string();
    assert_eq!(run(&["formula", "mvd", "wheel", "6"]), "1");
    assert_eq!(run(&["formula", "mvd", "multipartite", "1", "1", "3"]), "4");
    assert_eq!(run(&["formula", "mvd", "theta", "2", "2", "2"]), "none");
    assert_eq!(run(&["formula", "fv", "6", "3"]), "14");
    assert_eq!(run(&["formula", "emax", "5", "2"]), "7");
    assert_eq!(run(&["formula", "emax", "3", "2"]), "undefined");
    assert_eq!(run(&["formula", "blockbound", "9", "2", "1"]), "5");
    assert_eq!(mvd(&["formula", "fv", "4", "5"]).status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let o = mvd(&["catalog", "list", "--catalog", &catalog_dir()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graph_9Vertex-9\t9\t12\t2"));
    let o = mvd(&["catalog", "check", "--catalog", &catalog_dir()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("52 entries checked, all pass"));

    let dir = scratch("catalog");
    let store = dir.join("store").display().to_string();
    let good = write(&dir, "square.txt", "a:1, b:2, c:1, d:2\n0, 1, 0, 1\n1, 0, 1, 0\n0, 1, 0, 1\n1, 0, 1, 0\n");
    let o = mvd(&["catalog", "add", &good, "--catalog", &store]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = mvd(&["catalog", "add", &good, "--catalog", &store]);
    assert!(stdout(&o).contains("isomorphic to existing entry square"));
    // a valid MVD-coloring that is not maximum
    let low = write(&dir, "low.txt", "a:1, b:1, c:1, d:1\n0, 1, 0, 1\n1, 0, 1, 0\n0, 1, 0, 1\n1, 0, 1, 0\n");
    assert_eq!(mvd(&["catalog", "add", &low, "--catalog", &store]).status.code(), Some(1));
    // three colors on C5 is not an MVD-coloring
    let bad = write(
        &dir,
        "bad.txt",
        "a:1, b:2, c:3, d:1, e:2\n0,1,0,0,1\n1,0,1,0,0\n0,1,0,1,0\n0,0,1,0,1\n1,0,0,1,0\n",
    );
    let o = mvd(&["catalog", "add", &bad, "--catalog", &store]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("integrity error"));
    // a corrupted file inside the store makes check fail
    fs::write(dir.join("store").join("broken.txt"), "a:1, b:1\n0, 1\n0, 0\n").unwrap();
    assert_eq!(mvd(&["catalog", "check", "--catalog", &store]).status.code(), Some(1));
}

#[test]
fn scans() {
    let o = mvd(&["scan", "extremal", "--n", "5", "--machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("k=2 emax=7 expect=7 ok"));
    assert!(!out.contains("FAIL"));
    let o = mvd(&["scan", "property", "--n", "5", "--prop", "compose-agrees-exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
    assert_eq!(mvd(&["scan", "property", "--n", "5", "--prop", "nope"]).status.code(), Some(2));
    assert_eq!(mvd(&["scan", "extremal", "--n", "9"]).status.code(), Some(3));
}

#[test]
fn blocks_output() {
    let o = mvd(&["blocks", &data("c5.mvdg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cutVerticesSet:[]"));
    assert!(stdout(&o).contains("Block num 1"));
}
