use std::path::{Path, PathBuf};
use std::process::Command;

use num_bigint::BigInt;
use seifert_cli::app::{run, Outcome};
use seifert_cli::report::InvariantReport;
use serde_json::Value;
use tempfile::TempDir;

fn spec_file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn seifert(args: &[&str]) -> Outcome {
    run(std::iter::once("seifert").chain(args.iter().copied()))
}

fn compute_json(path: &Path) -> InvariantReport {
    let out = seifert(&["compute", "--json", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn json(out: &Outcome) -> Value {
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn compute_examples() {
    let dir = TempDir::new().unwrap();
    let r = compute_json(&spec_file(&dir, "a.json", r#"{"builder":"s2xs2","params":[1,1]}"#));
    assert_eq!(
        (r.haefliger, r.hopf, r.sigma, r.smale_of_projection),
        (1.into(), (-8).into(), 0.into(), 4.into())
    );
    let r = compute_json(&spec_file(&dir, "k.json", r#"{"builder":"kummer","params":[1,1]}"#));
    assert_eq!((r.haefliger, r.sigma, r.rank), (3.into(), (-16).into(), 22));

    let bad = spec_file(&dir, "bad.json", r#"{"gram":[[1]],"euler":[2]}"#);
    let out = seifert(&["compute", bad.to_str().unwrap()]);
    assert_eq!(out.code, 3);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("characteristic"), "{}", out.stderr);
}

#[test]
fn compute_error_codes() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("not json", 2),
        (r#"{"builder":"torus"}"#, 2),
        (r#"{"gram":[[2,1],[1,2]],"euler":[0,0]}"#, 3),
        (r#"{"gram":[[0,1],[1,0]],"euler":[1,0]}"#, 3),
        (r#"{"gram":[[0,1],[1,0]],"euler":[0]}"#, 3),
        (r#"{"gram":[[0,1],[2,0]],"euler":[0,0]}"#, 3),
        (r#"{"gram":[[0,1]],"euler":[0,0]}"#, 3),
    ];
    for (i, (body, code)) in cases.into_iter().enumerate() {
        let p = spec_file(&dir, &format!("{i}.json"), body);
        let out = seifert(&["compute", p.to_str().unwrap()]);
        assert_eq!(out.code, code, "{body}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
    let missing = dir.path().join("missing.json");
    assert_eq!(seifert(&["compute", missing.to_str().unwrap()]).code, 2);
}

#[test]
fn builder_and_explicit_specs_agree() {
    let dir = TempDir::new().unwrap();
    let pairs = [
        (
            r#"{"builder":"s2xs2","params":[3,-2]}"#,
            r#"{"gram":[[0,1],[1,0]],"euler":[6,-4],"label":"s2xs2(3,-2)"}"#,
        ),
        (
            r#"{"builder":"cp2","params":[3]}"#,
            r#"{"gram":[[1]],"euler":[7],"label":"cp2(3)"}"#,
        ),
        (
            r#"{"builder":"cp2bar","params":[-2]}"#,
            r#"{"gram":[[-1]],"euler":[-3],"label":"cp2bar(-2)"}"#,
        ),
        (
            r#"{"sum":[{"builder":"cp2","params":[0]},{"builder":"s2xs2","params":[1,1]}]}"#,
            r#"{"gram":[[1,0,0],[0,0,1],[0,1,0]],"euler":[1,2,2],"label":"cp2(0)♮s2xs2(1,1)"}"#,
        ),
    ];
    for (i, (b, e)) in pairs.into_iter().enumerate() {
        let rb = compute_json(&spec_file(&dir, &format!("b{i}.json"), b));
        let re = compute_json(&spec_file(&dir, &format!("e{i}.json"), e));
        assert_eq!(rb, re);
    }
}

#[test]
fn json_round_trip_reproduces_fields() {
    let dir = TempDir::new().unwrap();
    let p = spec_file(
        &dir,
        "big.json",
        r#"{"builder":"s2xs2","params":["123456789012345678901234567890","-98765432109876543210"]}"#,
    );
    let r = compute_json(&p);
    r.validate().unwrap();
    let expected: BigInt = "-12193263113702179522496570642237463801111263526900".parse().unwrap();
    assert_eq!(r.haefliger, expected);
    let again: InvariantReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn human_output_has_fixed_columns() {
    let dir = TempDir::new().unwrap();
    let p = spec_file(&dir, "c.json", r#"{"builder":"cp2","params":[3]}"#);
    let out = seifert(&["compute", p.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let lines: Vec<Vec<&str>> = out.stdout.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(
        lines[0],
        ["label", "rank", "sigma", "e.e", "H", "Omega", "omega_proj", "parity"]
    );
    assert_eq!(lines[1], ["cp2(3)", "1", "1", "49", "-49", "6", "26", "odd"]);
}

#[test]
fn realize_examples() {
    let v = json(&seifert(&["realize", "--json", "--omega", "1", "--hopf", "0"]));
    assert_eq!(v["q_count"], 8);
    assert_eq!(v["p_count"], 0);
    assert_eq!(v["result"]["sigma"], -8);
    assert_eq!(v["result"]["haefliger"], 1);

    let v = json(&seifert(&["realize", "--json", "--omega", "0", "--sigma", "0"]));
    assert_eq!((v["p_count"].as_u64(), v["q_count"].as_u64()), (Some(0), Some(0)));
    assert_eq!(v["result"]["label"], "s2xs2(0,1)");

    let v = json(&seifert(&["realize", "--json", "--omega", "2", "--hopf", "-16"]));
    assert_eq!(v["result"]["hopf"], -16);
    assert_eq!(v["result"]["haefliger"], 2);
    assert_eq!(v["result"]["sigma"], 0);

    let out = seifert(&["realize", "--omega", "-3", "--sigma", "-5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("p_count: 0\nq_count: 5\n"), "{}", out.stdout);
}

#[test]
fn realize_with_base() {
    let dir = TempDir::new().unwrap();
    let base = spec_file(&dir, "k.json", r#"{"builder":"kummer","params":[1,1]}"#);
    let b = base.to_str().unwrap();
    let v = json(&seifert(&["realize", "--json", "--base", b, "--sigma", "0"]));
    assert_eq!(v["p_count"], 16);
    assert_eq!(v["result"]["haefliger"], 3);
    assert_eq!(
        json(&seifert(&[
            "realize", "--json", "--base", b, "--omega", "3", "--hopf", "0"
        ]))["result"]["hopf"],
        0
    );
    assert_eq!(
        seifert(&["realize", "--base", b, "--omega", "2", "--hopf", "0"]).code,
        2
    );
}

#[test]
fn realize_flag_misuse() {
    for args in [
        &["realize", "--omega", "1"][..],
        &["realize", "--hopf", "1"],
        &["realize", "--omega", "1", "--hopf", "1", "--sigma", "1"],
        &["realize", "--omega", "x", "--hopf", "1"],
        &["compute"],
        &["frobnicate"],
        &["compress", "--omega", "1"],
        &["compress", "--check", "--omega", "0", "--smale", "0"],
    ] {
        let out = seifert(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn compress_examples() {
    let v = json(&seifert(&["compress", "--json", "--omega", "1", "--smale", "2"]));
    assert_eq!((v["a"].as_i64(), v["b"].as_i64()), (Some(-1), Some(7)));
    assert_eq!(v["surface"]["haefliger"], 1);
    assert_eq!(v["surface"]["smale_of_projection"], 2);

    let out = seifert(&["compress", "--omega", "0", "--smale", "0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("A: 0\nB: 0\n"), "{}", out.stdout);

    let out = seifert(&["compress", "--omega", "0", "--smale", "1"]);
    assert_eq!(out.code, 4);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("odd"), "{}", out.stderr);
}

#[test]
fn table_check_and_rows() {
    let out = seifert(&["table", "--check"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let row = |label: &str| -> Vec<String> {
        out.stdout
            .lines()
            .map(|l| l.split_whitespace().map(String::from).collect::<Vec<_>>())
            .find(|c| c[0] == label)
            .unwrap_or_else(|| panic!("no row {label}"))
    };
    assert_eq!(row("s2xs2(3,-2)")[5], "-6");
    let cp2 = row("cp2(3)");
    assert_eq!((cp2[4].as_str(), cp2[5].as_str()), ("-49", "6"));
    assert_eq!(row("kummer(2,1)")[5], "4");

    let v = json(&seifert(&["table", "--json"]));
    assert_eq!(v.as_array().unwrap().len(), out.stdout.lines().count() - 1);
}

#[test]
fn help_and_version_go_to_stdout() {
    for args in [&["--help"][..], &["--version"], &["compress", "--help"]] {
        let out = seifert(args);
        assert_eq!(out.code, 0, "{args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_seifert");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["compress", "--omega", "0", "--smale", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
    let out = status(&["table", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
    assert_eq!(status(&["realize"]).status.code(), Some(2));
}
