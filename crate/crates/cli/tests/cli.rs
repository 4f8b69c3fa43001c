use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bqalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqalg")).args(args).output().unwrap()
}

fn bqalg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bqalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every output line is JSON"))
        .collect()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const WORKED: &str = "(1+1I) + (1-1I)i + (-1-1I)j + (-1+1I)k";

#[test]
fn classify_worked_examples() {
    let out = bqalg(&["classify", WORKED, "i + Ij", "1", "0", "2 + i"]);
    assert!(out.status.success());
    let recs = lines(&out);
    let tags: Vec<_> = recs.iter().map(|r| r["classification"].as_str().unwrap()).collect();
    assert_eq!(tags, ["NonPureZeroDivisor", "Nilpotent", "TrivialIdempotent", "Zero", "Invertible"]);
    assert_eq!(recs[0]["norm_real"], "4");
    assert_eq!(recs[0]["norm_imag"], "4");
    assert_eq!(recs[0]["inner_product"], "0");
    assert_eq!(recs[0]["semi_norm"], serde_json::json!(["0", "0"]));
    assert_eq!(recs[4]["semi_norm"], serde_json::json!(["5", "0"]));
}

#[test]
fn classify_parse_error_exits_2() {
    let out = bqalg(&["classify", "1 + + i"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ParseError"));
}

#[test]
fn classify_reads_stdin_lines() {
    let out = bqalg_stdin(&["classify"], "i + Ij\n\n1/2 + 1/2 Ii\n");
    assert!(out.status.success());
    let recs = lines(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["classification"], "Idempotent");
}

#[test]
fn decimals_select_approx() {
    let out = bqalg(&["classify", "0.5 + 0.5Ii"]);
    let recs = lines(&out);
    assert_eq!(recs[0]["input"]["backend"], "approx");
    assert_eq!(recs[0]["classification"], "Idempotent");
    let out = bqalg(&["--backend", "exact", "classify", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_must_be_zero_for_exact() {
    assert_eq!(bqalg(&["--tolerance", "1e-6", "classify", "1"]).status.code(), Some(2));
    assert!(bqalg(&["--tolerance", "1e-6", "classify", "1.0"]).status.success());
    assert_eq!(bqalg(&["--tolerance", "-1", "classify", "1.0"]).status.code(), Some(2));
}

#[test]
fn json_input_round_trips() {
    let gen = bqalg(&["generate", "idempotent", "--seed", "3"]);
    let doc = String::from_utf8(gen.stdout).unwrap();
    let out = bqalg(&["--json", "classify", doc.trim()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rec = &lines(&out)[0];
    assert_eq!(rec["classification"], "Idempotent");
    assert_eq!(rec["input"].to_string(), doc.trim());
    // Without the flag a leading brace is still detected.
    assert!(bqalg(&["classify", doc.trim()]).status.success());
    assert_eq!(bqalg(&["--json", "classify", "i + j"]).status.code(), Some(2));
}

#[test]
fn generate_self_verifies_and_is_deterministic() {
    for kind in ["idempotent", "nilpotent", "zero-divisor", "root-of-minus-one"] {
        let a = bqalg(&["generate", kind, "--seed", "7", "--count", "5"]);
        let b = bqalg(&["generate", kind, "--seed", "7", "--count", "5"]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(lines(&a).len(), 5);
    }
    let a = bqalg(&["generate", "--seed", "1"]);
    let b = bqalg(&["generate", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn generated_nilpotents_square_to_zero() {
    let out = bqalg(&["generate", "nilpotent", "--seed", "7", "--count", "3"]);
    for doc in lines(&out) {
        let sq = bqalg(&["compute", "square", &doc.to_string()]);
        let result = &lines(&sq)[0]["result"];
        for key in ["W", "X", "Y", "Z"] {
            assert_eq!(result[key], serde_json::json!(["0", "0"]));
        }
    }
}

#[test]
fn generate_approx_backend() {
    let out = bqalg(&["--backend", "approx", "generate", "idempotent", "--count", "3"]);
    assert!(out.status.success());
    for doc in lines(&out) {
        assert_eq!(doc["backend"], "approx");
        assert!(doc["W"][0].is_f64());
    }
}

#[test]
fn generate_bad_flags_exit_2() {
    assert_eq!(bqalg(&["generate", "--count", "0"]).status.code(), Some(2));
    assert_eq!(bqalg(&["generate", "unicorn"]).status.code(), Some(2));
    assert_eq!(bqalg(&["generate", "--seed", "-1"]).status.code(), Some(2));
}

#[test]
fn compute_examples() {
    let out = bqalg(&["compute", "square", "i + Ij"]);
    let r = &lines(&out)[0];
    assert_eq!(r["op"], "square");
    assert_eq!(r["result"]["X"], serde_json::json!(["0", "0"]));

    let out = bqalg(&["compute", "seminorm", WORKED]);
    assert_eq!(lines(&out)[0]["result"]["W"], serde_json::json!(["0", "0"]));

    let out = bqalg(&["compute", "product", "i", "j", "j", "i"]);
    let recs = lines(&out);
    assert_eq!(recs[0]["result"]["Z"], serde_json::json!(["1", "0"]));
    assert_eq!(recs[1]["result"]["Z"], serde_json::json!(["-1", "0"]));

    let out = bqalg(&["compute", "inverse", "2"]);
    assert_eq!(lines(&out)[0]["result"]["W"], serde_json::json!(["1/2", "0"]));

    let out = bqalg(&["compute", "conjugate", "1 + 2i + Ij"]);
    assert_eq!(lines(&out)[0]["result"]["X"], serde_json::json!(["-2", "0"]));
    let out = bqalg(&["compute", "complex-conjugate", "1 + 2i + Ij"]);
    assert_eq!(lines(&out)[0]["result"]["Y"], serde_json::json!(["0", "-1"]));
}

#[test]
fn inverse_of_divisor_exits_3() {
    let out = bqalg(&["compute", "inverse", "1 + Ii"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("ZeroDivisor"));
    assert!(out.stdout.is_empty());
}

#[test]
fn compute_arity_and_mixed_backends() {
    assert_eq!(bqalg(&["compute", "product", "i"]).status.code(), Some(2));
    assert_eq!(bqalg(&["compute", "square"]).status.code(), Some(2));
    assert_eq!(bqalg(&["compute", "frobnicate", "i"]).status.code(), Some(2));
    let out = bqalg(&["compute", "product", "0.5i", "2j"]);
    let r = &lines(&out)[0]["result"];
    assert_eq!(r["backend"], "approx");
    assert_eq!(r["Z"], serde_json::json!([1.0, 0.0]));
}

#[test]
fn normalize_both_branches() {
    let out = bqalg(&["normalize", "1 + Ii", "i + Ij", "2i + 2Ij"]);
    assert!(out.status.success());
    let recs = lines(&out);
    assert_eq!(recs[0]["kind"], "non-pure");
    assert_eq!(recs[0]["alpha"], serde_json::json!(["2", "0"]));
    assert_eq!(recs[0]["idempotent"]["W"], serde_json::json!(["1/2", "0"]));
    assert_eq!(recs[1]["kind"], "nilpotent");
    assert_eq!(recs[1]["common_norm"], "1");
    assert_eq!(recs[2]["common_norm"], "4");
    assert_eq!(recs[2]["modulus"], "2");
    assert_eq!(recs[2]["mu"], serde_json::json!(["0", "1", "0", "0"]));
}

#[test]
fn normalize_rejects_non_divisors() {
    let out = bqalg(&["normalize", "1 + i"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("NotZeroDivisor"));
}

#[test]
fn verify_reports() {
    let out = bqalg(&["verify", "criterion-equivalence", "--trials", "10000", "--seed", "1"]);
    assert!(out.status.success());
    let r = &lines(&out)[0];
    assert_eq!(r["theorem_id"], "criterion-equivalence");
    assert_eq!(r["trials"], 10000);
    assert_eq!(r["failures"], 0);
    assert!(r["first_counterexample"].is_null());
    assert!(r["elapsed"].as_f64().unwrap() >= 0.0);

    let out = bqalg(&["verify", "nilpotents-are-pure", "--trials", "10000", "--seed", "1"]);
    assert!(out.status.success());
    assert_eq!(lines(&out)[0]["failures"], 0);
}

#[test]
fn verify_all_runs_every_suite() {
    let out = bqalg(&["verify", "all", "--trials", "200"]);
    assert!(out.status.success());
    assert_eq!(lines(&out).len(), 6);
}

#[test]
fn verify_deterministic_apart_from_timing() {
    let strip = |o: &Output| {
        let mut v = lines(o)[0].clone();
        v.as_object_mut().unwrap().remove("elapsed");
        v
    };
    let a = bqalg(&["verify", "square-scaling", "--trials", "300", "--seed", "9"]);
    let b = bqalg(&["verify", "square-scaling", "--trials", "300", "--seed", "9"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn verify_bad_flags_exit_2() {
    assert_eq!(bqalg(&["verify", "criterion-equivalence", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(bqalg(&["verify", "fermat"]).status.code(), Some(2));
}

#[test]
fn approx_document_into_exact_backend_exits_2() {
    let doc = r#"{"backend":"approx","W":[0.5,0.0],"X":[0.0,0.0],"Y":[0.0,0.0],"Z":[0.0,0.0]}"#;
    let out = bqalg(&["--backend", "exact", "classify", doc]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("BackendMismatch"));
    let out = bqalg(&["--backend", "approx", "classify", doc]);
    assert!(out.status.success());
}
