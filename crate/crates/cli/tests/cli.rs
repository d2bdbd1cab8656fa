use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hadlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadlab")).args(args).output().unwrap()
}

fn hadlab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hadlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn family_wheel_five() {
    let o = hadlab(&["family", "wheel", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Ehfw\n");
}

#[test]
fn family_dot() {
    let o = hadlab(&["family", "wheel", "3", "--dot"]);
    let s = stdout(&o);
    assert!(s.starts_with("graph G {"));
    assert_eq!(s.matches(" -- ").count(), 6);
}

#[test]
fn critical_k4() {
    let o = hadlab(&["critical", "C~", "--k", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "critical chi=4\n");
    let o = hadlab(&["critical", "Ehfw", "--k", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["kind"], "critical");
}

#[test]
fn classify_truncated_cube() {
    let g3 = stdout(&hadlab(&["family", "truncate", "3", "0"]));
    let o = hadlab(&["classify", g3.trim()]);
    let row = stdout(&o);
    let fields: Vec<&str> = row.trim().split(',').collect();
    // graph6,n,m,chi,critical,free_planar,free_hadwiger4,"K5-,K5","K33-,K33",tag,hadwiger
    assert_eq!(&fields[1..7], &["7", "12", "4", "true", "false", "false"]);
    assert!(row.contains("\"K5-,K5\""));
    assert!(row.contains("\"K33-,K33\""));
}

#[test]
fn minor_witness() {
    let o = hadlab(&["minor", "C~", "--pattern", "K3"]);
    assert!(stdout(&o).starts_with("minor K3 branch_sets=["));
    let o = hadlab(&["minor", "Ehfw", "--pattern", "K5-"]);
    assert_eq!(stdout(&o), "no_minor K5-\n");
}

#[test]
fn bracket_chains() {
    assert_eq!(stdout(&hadlab(&["bracket", "Ehfw", "--chain", "clique"])), "W4,K5-\n");
    assert_eq!(
        stdout(&hadlab(&["bracket", "Ehfw", "--chain", "bipartite"])),
        "C6+,K33-\n"
    );
}

#[test]
fn batch_mode_keeps_lines() {
    let o = hadlab_stdin(&["color", "-"], "C~\nnot graph6\nBw\nDhc\n");
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("chi=4"));
    assert!(lines[1].starts_with("error:"));
    assert!(lines[3].starts_with("chi=3"));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(hadlab(&["color"]).status.code(), Some(2));
    assert_eq!(hadlab(&["color", "C~", "--bogus"]).status.code(), Some(2));
    assert_eq!(hadlab(&["color", "C"]).status.code(), Some(3));
    assert_eq!(hadlab(&["family", "wheel", "2"]).status.code(), Some(2));
    assert_eq!(
        hadlab(&["scan", "critical", "--n-max", "11", "--k", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(hadlab(&["family", "higher-wheel", "5"]).status.code(), Some(2));
    assert_eq!(hadlab(&["color", "C~", "--k", "3"]).status.code(), Some(0));
}

#[test]
fn scan_writes_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("q1.json");
    let csv = dir.path().join("q1.csv");
    let o = hadlab(&[
        "scan",
        "question1",
        "--n-max",
        "7",
        "--out",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["scan"], "question1");
    assert_eq!(report["counts"]["class_i"], 3);
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert!(rows.starts_with("graph6,n,m,chi,critical,free_planar,free_hadwiger4,bracket_clique,bracket_bipartite,tag"));
    assert_eq!(rows.lines().count(), 1 + 4);
}

#[test]
fn identify_fills_store() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.txt");
    let store_arg = store.to_str().unwrap();
    let o = hadlab(&[
        "scan",
        "identify",
        "--i",
        "5",
        "--store",
        store_arg,
        "--out",
        dir.path().join("r.json").to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&store).unwrap();
    assert!(text.contains("# i=3 checklist="));
    let o = hadlab(&["family", "higher-wheel", "5", "--store", store_arg]);
    if text.contains("# i=5 ") {
        assert!(o.status.success());
        assert!(text.contains(stdout(&o).trim()));
    } else {
        assert_eq!(o.status.code(), Some(2));
    }
    let g3 = stdout(&hadlab(&["family", "truncate", "3", "0"]));
    let o = hadlab(&["family", "higher-wheel", "3", "--override", g3.trim()]);
    assert_eq!(stdout(&o), g3);
    assert_eq!(
        hadlab(&["family", "higher-wheel", "3", "--override", "C~"])
            .status
            .code(),
        Some(2)
    );
    std::fs::write(&store, text.replace("checklist=", "checklist=0")).unwrap();
    assert_eq!(
        hadlab(&["family", "higher-wheel", "5", "--store", store_arg])
            .status
            .code(),
        Some(3)
    );
}
