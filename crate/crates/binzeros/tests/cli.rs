//! Black-box checks of the command-line interface: exit codes, precision
//! resolution, deterministic output, and file emission.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_binzeros"))
}

#[test]
fn usage_and_domain_errors_exit_2() {
    let out = bin().arg("frobnicate").output().expect("run");
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["zeros", "--r", "3"]).output().expect("run");
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["zeros", "--r", "9", "--n", "3"])
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("binzeros:"));
}

#[test]
fn help_and_version_exit_0() {
    let out = bin().arg("--help").output().expect("run");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("zeros"));

    let out = bin().arg("--version").output().expect("run");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn hypothesis_violations_exit_2() {
    // The containment region is only defined for 1 <= r <= n-2.
    let out = bin()
        .args(["verify", "--r", "5", "--n", "6"])
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precision_resolution_flag_env_default() {
    let out = bin()
        .args(["zeros", "--r", "1", "--n", "9", "--precision-bits", "256"])
        .env("BINZEROS_PRECISION", "512")
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["precision_bits"], 256);

    let out = bin()
        .args(["zeros", "--r", "1", "--n", "9"])
        .env("BINZEROS_PRECISION", "512")
        .output()
        .expect("run");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["precision_bits"], 512);

    // Below the 53-bit floor the request is a usage error.
    let out = bin()
        .args(["zeros", "--r", "1", "--n", "9"])
        .env("BINZEROS_PRECISION", "13")
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let run = || {
        bin()
            .args(["zeros", "--r", "10", "--n", "30", "--format", "csv"])
            .output()
            .expect("run")
    };
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn out_flag_writes_requested_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("zeros.csv");
    let out = bin()
        .args(["zeros", "--r", "2", "--n", "7", "--format", "csv", "--out"])
        .arg(&path)
        .output()
        .expect("run");
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).expect("written file");

    let direct = bin()
        .args(["zeros", "--r", "2", "--n", "7", "--format", "csv"])
        .output()
        .expect("run");
    assert_eq!(written, direct.stdout);
}
