use std::process::Command;

fn distspec(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn spectrum_of_k3() {
    let (code, out, _) = distspec(&["spectrum", "Bw"]);
    assert_eq!(code, 0);
    assert!(out.contains("λ^3 - 3λ - 2"));
    assert!(out.contains("2.0000 -1.0000 -1.0000"));
}

#[test]
fn classify_pendant_clique() {
    let (code, out, _) = distspec(&["classify", "--gen", "pendant", "5", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "family Kst(5,3), exact: below");
}

#[test]
fn scan_order_six() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = distspec(&["scan", "--order", "6", "--out", d]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("violations: 0"));
    let first = std::fs::read(dir.path().join("scan_n6.json")).unwrap();
    let (code, _, _) = distspec(&["scan", "--order", "6", "--jobs", "3", "--out", d]);
    assert_eq!(code, 0);
    assert_eq!(first, std::fs::read(dir.path().join("scan_n6.json")).unwrap());
}

#[test]
fn json_lines_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(["--json", "classify"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\nCr\nDhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["descriptor"], "K_n(3)");
}

#[test]
fn exit_codes() {
    assert_eq!(distspec(&[]).0, 2);
    assert_eq!(distspec(&["spectrum", "B?"]).0, 2);
    let (code, _, err) = distspec(&["scan", "--order", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("--graph6"));
    assert_eq!(distspec(&["verify", "theorem9"]).0, 0);
}
