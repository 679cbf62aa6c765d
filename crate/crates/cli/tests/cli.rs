use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn amgroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amgroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = amgroups(args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn props_sl2_3() {
    let out = ok(&["props", "SL2_3", "--properties", "monomial,am,sam"]);
    let lines: Vec<&str> = out.lines().skip(1).collect();
    assert!(lines[0].starts_with("monomial: false"));
    assert_eq!(lines[1], "am: true");
    assert!(lines[2].starts_with("sam: false"));
}

#[test]
fn props_a6_is_not_am() {
    let out = ok(&["props", "A6", "--properties", "am"]);
    assert!(out.lines().nth(1).unwrap().starts_with("am: false"));
}

#[test]
fn lt_s4() {
    let out = ok(&["lt", "S4"]);
    let row = out
        .lines()
        .find(|l| l.split_whitespace().next() == Some("4"))
        .unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cells, ["4", "5", "5"]);
    assert!(out.contains("consistent"));
}

#[test]
fn chartab_lift_and_subgroups() {
    let out = ok(&["chartab", "S3", "--lift"]);
    assert!(out.contains("p = 7"));
    assert!(out.contains("1*z^2 + 1*z^4"));
    let plain = ok(&["chartab", "S4"]);
    assert_eq!(plain.lines().filter(|l| l.starts_with('X')).count(), 5);
    let subs = ok(&["subgroups", "S4"]);
    assert!(subs.starts_with("30 subgroups in 11 classes"));
    assert_eq!(subs.lines().count(), 12);
}

#[test]
fn json_round_trip_and_mutations() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("s4.json");
    ok(&["props", "S4", "--properties", "am", "--json", report.to_str().unwrap()]);
    let v = json(&report);
    assert_eq!(v["property"], "am");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 20);
    assert!(ok(&["certify", "S4", report.to_str().unwrap()]).ends_with("certificate: valid\n"));

    let mut dropped = v.clone();
    dropped["certificates"].as_array_mut().unwrap().pop();
    let path = dir.path().join("dropped.json");
    fs::write(&path, dropped.to_string()).unwrap();
    let out = ok(&["certify", "S4", path.to_str().unwrap()]);
    assert!(out.contains("incomplete coverage"));
    assert!(out.ends_with("certificate: invalid\n"));

    let mut tampered = v.clone();
    tampered["certificates"][3]["character"]["index"] = Value::from(1);
    let path = dir.path().join("tampered.json");
    fs::write(&path, tampered.to_string()).unwrap();
    let out = ok(&["certify", "S4", path.to_str().unwrap()]);
    assert!(out.contains("pair [0,"), "{out}");
    assert!(out.ends_with("certificate: invalid\n"));

    let o = amgroups(&["certify", "S3", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn threads_do_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut seen = Vec::new();
    for k in ["1", "2", "8"] {
        let path = dir.path().join(format!("r{k}.json"));
        let out = ok(&["props", "S3wrC2", "--threads", k, "--json", path.to_str().unwrap()]);
        let mut v = json(&path);
        for r in v.as_array_mut().unwrap() {
            r["stats"]["millis"] = Value::from(0);
        }
        seen.push((out, v));
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn relative_by_index_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(&["relative", "S4", "--normal-index", "5"]);
    assert!(out.contains("relative_am: true"));
    let nfile = dir.path().join("v4.txt");
    fs::write(&nfile, "degree 4\n(1,2)(3,4)\n(1,3)(2,4)\n").unwrap();
    let report = dir.path().join("rel.json");
    let out = ok(&[
        "relative",
        "S4",
        "--normal-file",
        nfile.to_str().unwrap(),
        "--json",
        report.to_str().unwrap(),
    ]);
    assert!(out.contains("normal subgroup: class 5 order 4"));
    assert!(ok(&["certify", "S4", report.to_str().unwrap()]).contains("certificate: valid"));
    let o = amgroups(&["relative", "S4", "--normal-index", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_groups() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.txt");
    fs::write(&path, "# the symmetric group on three points\ndegree 3\n(1,2,3)\n(1,2)\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = ok(&["props", &spec, "--properties", "am"]);
    assert!(out.contains("order 6"));
    assert!(out.contains("am: true"));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "degree 3\n").unwrap();
    let o = amgroups(&["props", &format!("file:{}", bad.display())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let o = amgroups(&["props", "S3x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('^'));
    assert_eq!(amgroups(&["props", "S8"]).status.code(), Some(3));
    assert_eq!(amgroups(&["--subgroup-limit", "5", "subgroups", "S4"]).status.code(), Some(3));
    assert_eq!(amgroups(&["props", "S4", "--max-order", "10"]).status.code(), Some(3));
    assert_eq!(amgroups(&["props", "S4", "--properties", "xam"]).status.code(), Some(2));
    assert_eq!(amgroups(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn corpus_fast() {
    let out = ok(&["corpus", "fast"]);
    assert!(out.ends_with("0 failures\n"));
    assert!(out.contains("GL2_3"));
    assert!(!out.contains("A6 "));
}
