use std::io::Write;
use std::process::{Command, Output, Stdio};

fn solidus(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_solidus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn batch(name: &str, lines: &str) -> Output {
    let dir = std::env::temp_dir().join(format!("solidus-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.txt"));
    std::fs::write(&path, lines).unwrap();
    let out = solidus(&["--batch", path.to_str().unwrap()], "");
    let _ = std::fs::remove_file(&path);
    out
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn batch_success() {
    let o = batch("success", "1/(1 - 1/rho) + o\n:cmp o , L\n:classify rho + o\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + o\nLT\nZerolessNonPrecise\n");
}

#[test]
fn batch_errors_continue_and_exit_one() {
    let o = batch("errors", "1/o\n2*rho\n");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("error: "), "{out}");
    assert!(out.ends_with("2*rho\n"), "{out}");
}

#[test]
fn interactive_session_reads_stdin() {
    let o = solidus(&[], "o*L\n:quit\nnot reached\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "o\n");
}

#[test]
fn check_mode_exit_codes() {
    let ok = solidus(&["--check", "--only", "thm.oslash_pound", "--count", "10"], "");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "thm.oslash_pound\tPASS\t10\t0\n");
    let bad = solidus(&["--check", "--only", "mutant.oslash_pound", "--count", "50"], "");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("mutant.oslash_pound\tFAIL"));
    let unknown = solidus(&["--check", "--only", "nope"], "");
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(solidus(&["--seed", "3"], "").status.code(), Some(2));
    assert_eq!(solidus(&["--bogus"], "").status.code(), Some(2));
}
