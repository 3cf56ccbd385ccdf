use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn kissing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kissing"))
        .args(args)
        .output()
        .expect("running kissing")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn vector_lines(text: &str) -> usize {
    text.lines()
        .skip(1)
        .filter(|l| !l.starts_with("tags"))
        .count()
}

#[test]
fn build_writes_every_vector() {
    let path = scratch("dim16-odd.kiss");
    let o = kissing(&["build", "dim16-odd", "--out", path.to_str().unwrap(), "--float-sidecar"]);
    assert!(o.status.success(), "{o:?}");
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(vector_lines(&text), 4320);
    assert!(String::from_utf8_lossy(&o.stderr).contains("4320 vectors"));
    let side = fs::read_to_string(scratch("dim16-odd.kiss.float")).unwrap();
    assert_eq!(side.lines().count(), 4321);

    let o = kissing(&["build", "dim17-record"]);
    assert!(o.status.success());
    assert_eq!(vector_lines(&stdout(&o)), 5730);
}

#[test]
fn unknown_names_and_bad_usage() {
    assert_eq!(kissing(&["build", "nonexistent"]).status.code(), Some(1));
    assert_eq!(kissing(&["spectrum", "nonexistent"]).status.code(), Some(1));
    assert_eq!(kissing(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(kissing(&["certify", "everything"]).status.code(), Some(1));
    assert_eq!(kissing(&["--help"]).status.code(), Some(0));
    let o = kissing(&["list"]);
    assert_eq!(stdout(&o).lines().count(), 12);
}

#[test]
fn verify_accepts_exports_and_rejects_corruption() {
    let path = scratch("dim20-record.kiss");
    assert!(kissing(&["build", "dim20-record", "--out", path.to_str().unwrap()]).status.success());
    let o = kissing(&["--threads", "2", "verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let out = stdout(&o);
    assert!(out.contains("max inner      4\n"), "{out}");
    assert!(out.contains("verdict        valid"));

    // Adding the scale to one coordinate adds 2 a s + s^2 > 0 to the scaled norm.
    let small = scratch("dim16-even.kiss");
    assert!(kissing(&["build", "dim16-even", "--out", small.to_str().unwrap()]).status.success());
    let text = fs::read_to_string(&small).unwrap();
    let header = text.lines().next().unwrap();
    let scale: i64 = header.split_whitespace().nth(7).unwrap().parse().unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    let mut coords: Vec<i64> = lines[1].split_whitespace().map(|t| t.parse().unwrap()).collect();
    let i = coords.iter().position(|&a| a >= 0).unwrap();
    coords[i] += scale;
    lines[1] = coords.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let bad = scratch("corrupt.kiss");
    fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let o = kissing(&["verify", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{o:?}");
    assert!(stdout(&o).contains("verdict        invalid"));

    let empty = scratch("empty.kiss");
    fs::write(&empty, "").unwrap();
    let o = kissing(&["verify", "--in", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn spectrum_verdicts() {
    let o = kissing(&["spectrum", "dim18-record"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "5/12"), "{out}");
    assert!(out.contains("verdict: not a cross section"));
    let o = kissing(&["spectrum", "dim16-even"]);
    assert!(stdout(&o).contains("verdict: cross-section compatible"));
}

#[test]
fn certify_exit_codes() {
    let o = kissing(&["certify", "kernels"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("289 of 289 cells match"));
    assert_eq!(kissing(&["certify", "chain"]).status.code(), Some(0));
    let o = kissing(&["certify", "aut"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("failed: (b) alignment from crosses"));
}
