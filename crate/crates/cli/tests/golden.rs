use std::path::Path;
use std::process::Command;

use frobgrann_cli::golden::{run_golden, CASES};
use frobgrann_cli::{execute, parse_session, ExecOptions};

/// Set `UPDATE_GOLDEN=1` to rewrite the expected reports.
#[test]
fn golden_reports_match() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        for case in CASES {
            let doc = execute(
                &parse_session(case.script).unwrap(),
                &ExecOptions::default(),
            );
            std::fs::write(dir.join(format!("{}.json", case.name)), doc.masked_json()).unwrap();
        }
        return;
    }
    for outcome in run_golden() {
        assert!(outcome.pass(), "{outcome:?}");
    }
}

#[test]
fn binary_exit_codes_follow_the_contract() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for case in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_frobgrann"))
            .arg("run")
            .arg(dir.join(format!("{}.fg", case.name)))
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(case.exit_code), "{}", case.name);
        let masked = frobgrann_cli::mask_timings(&String::from_utf8(out.stdout).unwrap());
        assert_eq!(masked, case.expected_json, "{}", case.name);
    }
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("frobgrann-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.fg");
    std::fs::write(&bad, "ring A = poly(p=4, vars=[t1]);\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_frobgrann"))
        .arg("run")
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("1:1: p must be prime"), "{stderr}");

    let missing = Command::new(env!("CARGO_BIN_EXE_frobgrann"))
        .arg("run")
        .arg(dir.join("nope.fg"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));

    let text = Command::new(env!("CARGO_BIN_EXE_frobgrann"))
        .args(["run", "--format", "text"])
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verdict_fail.fg"))
        .output()
        .unwrap();
    assert_eq!(text.status.code(), Some(1));
    assert!(String::from_utf8(text.stdout)
        .unwrap()
        .contains("verdict: fail"));
    std::fs::remove_dir_all(&dir).ok();
}
