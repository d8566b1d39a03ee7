use std::path::Path;
use std::process::Command;

use clap::Parser;

use aglrc::cli::{run, Cli, CliError};

fn aglrc(args: &[&str]) -> Result<String, CliError> {
    let argv = std::iter::once("aglrc").chain(args.iter().copied());
    run(Cli::try_parse_from(argv).expect("arguments parse"))
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = dir.join(name).to_string_lossy().into_owned();
    let mut argv = vec!["build"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--out", &out]);
    aglrc(&argv).unwrap();
    out
}

#[test]
fn build_writes_descriptor_and_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let code = build(dir.path(), "hx.json", &["--curve", "hermitian", "--q", "2", "--construction", "x", "--t", "1"]);
    assert!(dir.path().join("hx.matrix.txt").exists());
    let info = aglrc(&["info", &code]).unwrap();
    assert!(info.contains("n: 8\n"));
    assert!(info.contains("k: 2 "));
    assert!(info.contains("partition x: 4 fibers of size 2, r=1"));
    assert!(info.contains("x,3,3,6 7\n"));
}

#[test]
fn encode_then_recover() {
    let dir = tempfile::tempdir().unwrap();
    let code = build(dir.path(), "c.json", &["--curve", "hermitian", "--q", "2", "--construction", "x", "--t", "2"]);
    let cw = aglrc(&["encode", &code, "--message", "1,2,3"]).unwrap();
    let symbols: Vec<&str> = cw.trim().split(',').collect();
    assert_eq!(symbols.len(), 8);
    let mut holed = symbols.clone();
    holed[5] = "?";
    let out = aglrc(&["recover", &code, "--word", &holed.join(","), "--erase", "5"]).unwrap();
    assert_eq!(out, format!("coordinate=5 value={} partition=x read=4\n", symbols[5]));
}

#[test]
fn bounds_csv_with_oracle_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let code = build(dir.path(), "l.json", &["--curve", "hermitian", "--q", "2", "--construction", "lrc2"]);
    let a = aglrc(&["bounds", &code, "--with-oracle"]).unwrap();
    let b = aglrc(&["bounds", &code, "--with-oracle"]).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with("name,kind,value,oracle,verdict,source,note\n"));
    assert!(a.contains("lrc2_claimed,lower,12,3,violated,"));
    assert!(a.contains("lrc2_btv,lower,3,3,holds-with-equality,"));
    assert!(dir.path().join("l.oracle.json").exists());
}

#[test]
fn oracle_queries_use_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let code = build(
        dir.path(),
        "y.json",
        &["--curve", "normtrace", "--q", "2", "--u", "2", "--construction", "y", "--t", "1"],
    );
    let d = aglrc(&["oracle", &code, "--what", "d"]).unwrap();
    assert!(d.starts_with("d=2 method=Exhaustive"));
    let ghw = aglrc(&["oracle", &code, "--what", "ghw"]).unwrap();
    assert_eq!(ghw.lines().map(|l| &l[..4]).collect::<Vec<_>>(), ["d_1=", "d_2=", "d_3=", "d_4="]);
    assert!(ghw.contains("d_2=3 "));
    let cache = std::fs::read_to_string(dir.path().join("y.oracle.json")).unwrap();
    assert!(cache.contains("\"distance\""));
    assert_eq!(aglrc(&["oracle", &code, "--what", "d"]).unwrap(), d);
    let sampled = aglrc(&["oracle", &code, "--what", "d", "--sample", "50", "--no-cache"]).unwrap();
    assert!(sampled.starts_with("d<="));
    assert!(sampled.contains("UPPER BOUND"));
}

#[test]
fn simulate_reports_local_repairs() {
    let dir = tempfile::tempdir().unwrap();
    let code = build(
        dir.path(),
        "y.json",
        &["--curve", "normtrace", "--q", "2", "--u", "3", "--construction", "y", "--t", "1"],
    );
    let state = dir.path().join("cluster");
    let args = [
        "simulate", &code, "--stripes", "8", "--failures", "20", "--seed", "5",
        "--state", state.to_str().unwrap(),
    ];
    let out = aglrc(&args).unwrap();
    assert_eq!(out, aglrc(&args).unwrap());
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "stripe,coordinate,node,method,axis,symbols_read");
    assert_eq!(lines.len(), 22);
    assert!(lines[1..21].iter().all(|l| l.ends_with(",local,y,6")));
    assert!(lines[21].contains("local=20") && lines[21].ends_with("readback=ok"));
    assert!(state.join("meta.json").exists());
}

#[test]
fn preconditions_exit_1_and_caps_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = aglrc(&["build", "--curve", "hermitian", "--q", "6", "--construction", "x", "--t", "1"]);
    assert_eq!(bad.unwrap_err().exit_code(), 1);
    let code = build(dir.path(), "big.json", &["--curve", "hermitian", "--q", "4", "--construction", "lrc2"]);
    let capped = aglrc(&["oracle", &code, "--what", "ghw:2"]).unwrap_err();
    assert_eq!(capped.exit_code(), 2);
    assert!(capped.to_string().contains("--sample"));
    let what = aglrc(&["oracle", &code, "--what", "weights"]).unwrap_err();
    assert_eq!(what.exit_code(), 1);
}

#[test]
fn binary_exit_codes_and_streams() {
    let bin = env!("CARGO_BIN_EXE_aglrc");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let ok = Command::new(bin)
        .args(["build", "--curve", "hermitian", "--q", "2", "--construction", "lrc2", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stderr).starts_with("aglrc "));
    assert!(!String::from_utf8_lossy(&ok.stdout).contains("aglrc 0."));
    let missing = Command::new(bin).args(["info"]).arg(dir.path().join("none.json")).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
    assert!(missing.stdout.is_empty());
}
