use std::io::Cursor;
use std::path::PathBuf;

use equimatch::cli::run;
use serde_json::Value;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn call(args: &[&str], stdin: &str) -> Outcome {
    let argv: Vec<String> = std::iter::once("equimatch")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn records(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equimatch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn construct_then_check() {
    let f6 = call(&["construct", "--family", "F", "--r", "6"], "");
    assert_eq!(f6.code, 0);
    let checked = call(&["check", "-"], &f6.out);
    assert_eq!(checked.code, 0);
    let rec = &records(&checked.out)[0];
    assert_eq!(rec["equimatchable"], true);
    assert_eq!(rec["regular_class"], "FGraph(6)");
    assert_eq!(rec["n"], 13);
    assert_eq!(rec["alpha"], 6);
}

#[test]
fn odd_f_parameter_is_a_usage_error() {
    let res = call(&["construct", "--family", "F", "--r", "5"], "");
    assert_eq!(res.code, 2);
    assert!(res.err.contains("even r"));
}

#[test]
fn unknown_subcommand_prints_usage() {
    let res = call(&["frobnicate"], "");
    assert_eq!(res.code, 2);
    assert!(res.err.contains("Usage"));
    assert_eq!(call(&["census", "--n", "8"], "").code, 2);
}

#[test]
fn check_continues_past_bad_lines() {
    let res = call(&["check", "-"], "C~\n!!\nEFz_\n");
    assert_eq!(res.code, 0);
    let recs = records(&res.out);
    assert_eq!(recs.len(), 3);
    assert!(recs[1].get("error").is_some());
    assert_eq!(recs[2]["regular_class"], "CompleteBipartiteKrr");
    let all_bad = call(&["check", "-"], "!!\n");
    assert_eq!(all_bad.code, 2);
}

#[test]
fn verify_reports_match() {
    let res = call(&["verify", "--r", "3", "--nmax", "12"], "");
    assert_eq!(res.code, 0);
    let rep = &records(&res.out)[0];
    assert_eq!(rep["match"], true);
    assert_eq!(call(&["verify", "--r", "7", "--nmax", "10"], "").code, 2);
}

#[test]
fn census_is_deterministic_across_worker_counts() {
    let one = call(&["--workers", "1", "census", "--n", "10", "--r", "4"], "");
    let four = call(&["--workers", "4", "census", "--n", "10", "--r", "4"], "");
    assert_eq!(one.code, 0);
    assert_eq!(one.out, four.out);
    assert_eq!(one.out.lines().count(), 59);
    let classified = call(&["census", "--n", "7", "--r", "4", "--classify"], "");
    assert_eq!(records(&classified.out).len(), 2);
}

#[test]
fn decompose_and_remainder_audit() {
    let f6 = call(&["construct", "--family", "F", "--r", "6"], "").out;
    let path = temp_file("f6.g6", &f6);
    let res = call(&["decompose", path.to_str().unwrap()], "");
    assert_eq!(res.code, 0, "{}", res.out);
    let recs = records(&res.out);
    assert_eq!(recs.len(), 25);
    assert!(recs.iter().all(|r| r["status"] != "fail"));
    assert!(recs.iter().all(|r| r["citation"].is_string()));
    let audit = call(&["audit-thm11", path.to_str().unwrap(), "--cap", "20"], "");
    assert_eq!(audit.code, 0);
    assert_eq!(records(&audit.out)[0]["passed"], true);
    // K_{3,3} is not factor-critical, so the remainder audit refuses it
    let k33 = temp_file("k33.g6", "EFz_\n");
    assert_eq!(call(&["audit-thm11", k33.to_str().unwrap()], "").code, 2);
}

#[test]
fn iso_exit_codes() {
    let a = temp_file(
        "a.g6",
        &call(&["construct", "--family", "CC", "--n", "7"], "").out,
    );
    let b = temp_file(
        "b.g6",
        &call(&["construct", "--family", "C", "--n", "7"], "").out,
    );
    let a2 = temp_file("a2.g6", "FLvn_\n");
    let (a, b, a2) = (
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        a2.to_str().unwrap(),
    );
    assert_eq!(call(&["iso", a, a2], "").code, 0);
    assert_eq!(call(&["iso", a, b], "").code, 1);
    assert_eq!(call(&["iso", a, "/nonexistent/graph.g6"], "").code, 2);
}
