use std::process::{Command, Output};

use lsb_core::characters::FormalCharacter;
use lsb_core::classifier::Verdict;
use lsb_core::oracle::{ProbeReport, ShapovalovReport};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn lsb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsb"))
        .args(args)
        .output()
        .expect("run lsb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = lsb(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("json output")
}

/// Parsing the printed JSON into `T` and printing it again is the identity.
fn round_trips<T: Serialize + DeserializeOwned>(v: &Value) {
    let parsed: T = serde_json::from_value(v.clone()).expect("parses");
    assert_eq!(&serde_json::to_value(&parsed).unwrap(), v);
}

#[test]
fn classify_osp54_example() {
    let v = json(&[
        "classify",
        "--algebra",
        "osp(5|4)",
        "--weight",
        "5/2,3/2|3,1",
        "--weight-is",
        "lambda-plus-rho",
    ]);
    assert_eq!(v["bounded"], "yes");
    assert_eq!(v["decidedBy"], "thmbound");
    assert_eq!(v["schema"], "lsb/1");
    round_trips::<Verdict>(&v);
}

#[test]
fn classify_d21a_is_always_bounded() {
    for w in ["1,2,3", "-7/3,1/2,0", "0,0,0"] {
        let v = json(&["classify", "--algebra", "D(2,1,a=1/2)", "--weight", w]);
        assert_eq!(v["bounded"], "yes", "{w}");
        assert_eq!(v["decidedBy"], "cor1_i");
    }
}

#[test]
fn weight_is_shifts_by_rho() {
    // ρ = (3/2, 1/2) on sp(4)'s default base is (2, 1)
    let a = json(&["classify", "--algebra", "sp(4)", "--weight", "0,0"]);
    let b = json(&[
        "classify",
        "--algebra",
        "sp(4)",
        "--weight",
        "2,1",
        "--weight-is",
        "lambda-plus-rho",
    ]);
    assert_eq!(a, b);
}

#[test]
fn bases_osp74_distinguished() {
    let o = lsb(&["bases", "--algebra", "osp(7|4)", "--distinguished"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("{δ1-δ2, δ2-ε1, ε1-ε2, ε2-ε3, ε3}"), "{text}");
    assert!(text.contains("{ε1-ε2, ε2-ε3, ε3-δ1, δ1-δ2, δ2}"), "{text}");
    let v = json(&["bases", "--algebra", "osp(7|4)", "--distinguished"]);
    assert_eq!(v["bases"].as_array().unwrap().len(), 2);
}

#[test]
fn explicit_and_distinguished_bases_agree() {
    let by_index = json(&[
        "classify",
        "--algebra",
        "osp(5|4)",
        "--weight",
        "1/2,3|2,-1",
        "--base",
        "distinguished:1",
    ]);
    let explicit = json(&[
        "classify",
        "--algebra",
        "osp(5|4)",
        "--weight",
        "1/2,3|2,-1",
        "--base",
        "{ε1-ε2, ε2-δ1, δ1-δ2, δ2}",
    ]);
    assert_eq!(by_index, explicit);
    let ascii = json(&[
        "classify",
        "--algebra",
        "osp(5|4)",
        "--weight",
        "1/2,3|2,-1",
        "--base",
        "{e1-e2, e2-d1, d1-d2, d2}",
    ]);
    assert_eq!(ascii, explicit);
}

#[test]
fn character_and_oracle_reports_round_trip() {
    let v = json(&[
        "character",
        "--algebra",
        "osp(3|2)",
        "--weight",
        "1/3|1/5",
        "--depth",
        "4",
    ]);
    round_trips::<FormalCharacter>(&v["character"]);
    let typical = json(&[
        "character",
        "--algebra",
        "osp(3|2)",
        "--weight",
        "1/3|1/5",
        "--depth",
        "4",
        "--typical",
    ]);
    assert_eq!(v["character"], typical["character"]);

    let m = json(&[
        "oracle-mult",
        "--algebra",
        "sp(4)",
        "--weight",
        "0,0",
        "--mu",
        "1,-1",
    ]);
    assert_eq!(
        (m["dimension"].as_u64(), m["rank"].as_u64()),
        (Some(1), Some(0))
    );
    round_trips::<ShapovalovReport>(&m);

    let p = json(&[
        "oracle-probe",
        "--algebra",
        "sp(4)",
        "--weight",
        "0,0",
        "--depths",
        "4,6,8",
    ]);
    assert_eq!(p["status"], "oracleBounded");
    assert_eq!(p["maxMult"], serde_json::json!([1, 1, 1]));
    round_trips::<ProbeReport>(&p);
}

#[test]
fn parse_errors_exit_1() {
    let o = lsb(&["classify", "--algebra", "osp(5|4)", "--weight", "1,2|3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("s=2, n=2"), "{}", stderr(&o));
    assert_eq!(
        lsb(&["classify", "--algebra", "osp(5|)", "--weight", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lsb(&["classify", "--algebra", "sp(4)", "--weight", "1/0,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lsb(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        lsb(&[
            "bases",
            "--algebra",
            "osp(5|4)",
            "--form-convention",
            "upside-down"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(lsb(&["--help"]).status.code(), Some(0));
}

#[test]
fn hypothesis_violation_exits_2() {
    // λ+ρ = 2ε1+2δ1 is orthogonal to ε1+δ1
    let o = lsb(&[
        "character",
        "--algebra",
        "osp(3|2)",
        "--weight",
        "2|2",
        "--weight-is",
        "lambda-plus-rho",
        "--typical",
    ]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("not strongly typical"));
}

#[test]
fn unknown_under_strict_exits_3() {
    let args = [
        "classify",
        "--algebra",
        "gl(3|1)",
        "--weight",
        "1/2,1/3,1/5|0",
        "--depth",
        "4",
    ];
    assert_eq!(lsb(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    let o = lsb(&strict);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("bounded: unknown"));
}

#[test]
fn oracle_cap_exits_4_with_estimate() {
    let o = lsb(&[
        "character",
        "--algebra",
        "osp(7|6)",
        "--weight",
        "0,0,0|0,0,0",
        "--depth",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("estimated cost"), "{}", stderr(&o));
    let o = lsb(&[
        "character",
        "--algebra",
        "osp(3|2)",
        "--weight",
        "0|0",
        "--depth",
        "13",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn validate_grid_reports_agreement() {
    let ok = lsb(&[
        "validate-grid",
        "--algebra",
        "sp(4)",
        "--from",
        "0",
        "--to",
        "0",
        "--jobs",
        "2",
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).contains("PASS"));
    assert!(stdout(&ok).contains("1 points, 0 disagreements"));

    // λ+ρ = (1, 0) is unbounded but grows too slowly for depths 6, 8, 10
    let o = lsb(&[
        "validate-grid",
        "--algebra",
        "sp(4)",
        "--weight-is",
        "lambda-plus-rho",
        "--from",
        "0",
        "--to",
        "1",
        "--step",
        "1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(5));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert!(v["disagreements"].as_u64().unwrap() > 0);
}
