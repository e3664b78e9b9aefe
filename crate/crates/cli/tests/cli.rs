use std::process::{Command, Output};

use serde_json::Value;

fn csl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csl")).args(args).env_remove("CSL_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn index_quaternion() {
    let o = csl(&["index", "--structure", "Z3", "--quaternion", "(1,2,0,0)"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["sigma"], 5);
    assert_eq!(v["denominator"], "5");
    assert_eq!(v["method"], "closed-form");
    assert_eq!(v["cos_angle"], "-3/5");
    assert_eq!(v["csl_basis"], "1,0,0;0,1,0;0,2,5");
}

#[test]
fn index_pair_and_quotients() {
    let v = json(&csl(&["index", "--structure", "Z4", "--pair", "(1,1,0,0),(1,0,1,0)"]));
    assert_eq!(v["sigma"], 2);
    let v = json(&csl(&["index", "--structure", "D4", "--pair", "(1,1,0,0),(1,0,1,0)"]));
    assert_eq!(v["sigma"], 1);
    let v = json(&csl(&["index", "--structure", "Z2", "--quotient", "(4+3i)/5", "--reflect"]));
    assert_eq!(v["sigma"], 5);
    let v = json(&csl(&["index", "--structure", "M10", "--quotient", "(2+x)/(2+x^4)"]));
    assert_eq!(v["sigma"], 11);
    let v = json(&csl(&["index", "--structure", "MC", "--quaternion", "(tau,1,tau-1,0)/2"]));
    assert_eq!(v["sigma"], 4);
    let v = json(&csl(&["index", "--structure", "MB", "--quaternion", "(tau,1,tau-1,0)/2", "--oracle"]));
    assert_eq!(v["sigma"], 1);
    assert_eq!(v["method"], "oracle");
}

#[test]
fn exit_codes() {
    let o = csl(&["index", "--structure", "Z3", "--quaternion", "(1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = csl(&["index", "--structure", "nope", "--quaternion", "(1,1,1,1)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = csl(&["index", "--structure", "Z3", "--matrix", "1,0,0;0,1/2*sqrt(3),-1/2;0,1/2,1/2*sqrt(3)"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["sigma"], "infinite");
    let o = csl(&["index", "--structure", "Z3", "--quaternion", "(2,2,0,0)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_and_resume() {
    let o = csl(&["enumerate", "--structure", "Z2", "--max", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);

    let full = stdout(&csl(&["enumerate", "--structure", "Z3", "--max", "5"]));
    let mut rows: Vec<String> = Vec::new();
    let mut token: Option<String> = None;
    loop {
        let mut args = vec!["enumerate", "--structure", "Z3", "--max", "5", "--cap", "100"];
        if let Some(t) = &token {
            args.extend(["--resume", t.as_str()]);
        }
        let o = csl(&args);
        rows.extend(stdout(&o).lines().skip(1).map(String::from));
        if o.status.code() == Some(0) {
            break;
        }
        assert_eq!(o.status.code(), Some(4));
        let err = String::from_utf8(o.stderr).unwrap();
        token = Some(err.trim().rsplit(' ').next().unwrap().to_string());
    }
    let all: Vec<String> = full.lines().skip(1).map(String::from).collect();
    assert_eq!(rows, all);
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_csl"))
        .args(["enumerate", "--structure", "Z3", "--max", "3"])
        .env("CSL_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn count_d4() {
    let o = csl(&["count", "--structure", "D4", "--max", "23", "--nonzero"]);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows[..4], ["1,1", "3,16", "5,36", "7,64"]);
    assert_eq!(rows.last().unwrap(), "23,576");
}

#[test]
fn verify_and_classify() {
    for s in ["Z3", "FCC*", "D4", "MB", "M10"] {
        let o = csl(&["verify", "--structure", s, "--max", "9", "--threads", "2"]);
        assert!(o.status.success(), "{s}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let v = json(&csl(&["classify", "--structure", "Z3", "--sigma", "13"]));
    assert!(v["orbits"].as_array().unwrap().len() >= 2);
    assert_eq!(v["point_group_order"], 24);
}

#[test]
fn hierarchy_rows() {
    let o = csl(&["hierarchy", "--max", "5"]);
    let rows: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(rows[0], "m,sublattices,square,primitive_square,csl");
    assert_eq!(rows[5], "5,6,2,2,2");
}

#[test]
fn deterministic() {
    let a = csl(&["enumerate", "--structure", "MC", "--max", "9", "--format", "json"]);
    let b = csl(&["enumerate", "--structure", "MC", "--max", "9", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
