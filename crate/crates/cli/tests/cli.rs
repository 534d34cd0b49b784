use std::io::Write;
use std::process::{Command, Output, Stdio};

use orthokit::corpus;
use orthokit_cli::{emit_lattice, parse_documents, parse_lattice, LatticeDocument};

fn orthokit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orthokit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn mo2() -> String {
    emit_lattice(&LatticeDocument::from_ortho(&corpus::mo(2)).with_meta("name", "MO2"))
}

#[test]
fn exit_codes() {
    let m = orthokit(&["check"], &mo2());
    assert_eq!(m.status.code(), Some(1), "MO2 is not distributive");
    let two = emit_lattice(&LatticeDocument::from_ortho(&corpus::boolean_ol(1)));
    assert_eq!(orthokit(&["check"], &two).status.code(), Some(0));
    let b3 = orthokit(&["check"], &emit_lattice(&LatticeDocument::from_ortho(&corpus::boolean_ol(3))));
    assert_eq!(b3.status.code(), Some(1));
    assert!(stdout(&b3).contains("directly_irreducible: false ("));
    let o6 = orthokit(&["check"], &emit_lattice(&LatticeDocument::from_ortho(&corpus::o6())));
    assert_eq!(o6.status.code(), Some(1));
    assert!(stdout(&o6).contains("orthomodular: false (a, b)\n"));
    let bad = orthokit(&["check"], "elements: [0, 1]\ncovers: [[0, 2]]\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: "));
    let parse = orthokit(&["check"], "elements [0, 1]\n");
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 1"));
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mo2.lat");
    let output = dir.path().join("k.lat");
    std::fs::write(&input, mo2()).unwrap();
    let o = orthokit(&["kalmbach", "--in", input.to_str().unwrap(), "--out", output.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let k = parse_lattice(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(k.meta("name"), Some("K(MO2)"));
    assert!(k.perp.is_some());
    let again = orthokit(&["check", "--in", output.to_str().unwrap()], "");
    assert!(stdout(&again).contains("orthomodular: true\n"));
    let missing = orthokit(&["check", "--in", dir.path().join("none").to_str().unwrap()], "");
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn dot_output_parses_back() {
    let o = orthokit(&["dot"], &mo2());
    let text = stdout(&o);
    assert!(text.starts_with("digraph lattice {\n"));
    let back = parse_lattice(&text).unwrap();
    assert_eq!(emit_lattice(&back), mo2());
}

#[test]
fn rn_commands() {
    let l = orthokit(&["rn", "--rows", "2"], "");
    let doc = &parse_documents(&stdout(&l)).unwrap()[0];
    assert_eq!(doc.elements.len(), 3 + 4 * 2 + 1);
    let r = orthokit(&["rn", "--rows", "3", "--kalmbach", "--report"], "");
    assert_eq!(r.status.code(), Some(0));
    let text = stdout(&r);
    assert!(text.contains("covering_1: false ("));
    assert!(text.contains("covering_2: true\n"));
    assert_eq!(orthokit(&["rn", "--rows", "2", "--report"], "").status.code(), Some(2));
}

#[test]
fn keller_is_seeded() {
    let run = |seed: &str| stdout(&orthokit(&["keller", "--dim", "4", "--seed", seed, "--trials", "20", "--report"], ""));
    let a = run("3");
    assert_eq!(a, run("3"));
    assert!(a.contains("field_axioms: true"));
    assert!(!a.contains(": false"));
}
