use std::io::Write as _;

use serde_json::Value;
use vcirc_core::cli::run;
use vcirc_core::search::{SearchResult, DEFAULT_TABLE};

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn vcirc(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vcirc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = vcirc(&full);
    assert_eq!(o.code, 0, "{}", o.err);
    serde_json::from_str(&o.out).unwrap()
}

#[test]
fn shift_prints_successive_shifts() {
    let o = vcirc(&["shift", "--lambda", "1,0,1", "--v", "1,a,0", "--count", "2"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out, "0,1,a\na,0,a2\n");
}

#[test]
fn shift_with_cyclic_lambda_rotates() {
    let o = vcirc(&["shift", "--lambda", "1,0,0,0", "--v", "1,a,a2,0"]);
    assert_eq!(o.out, "0,1,a,a2\n");
}

#[test]
fn shift_json_and_csv() {
    let v = json(&["shift", "--lambda", "1,0,1", "--v", "1,a,0", "--count", "2"]);
    assert_eq!(v["shifts"], serde_json::json!(["0,1,a", "a,0,a2"]));
    let o = vcirc(&[
        "--format", "csv", "shift", "--lambda", "1,0,1", "--v", "1,a,0",
    ]);
    assert_eq!(o.out, "step,vector\n1,\"0,1,a\"\n");
}

#[test]
fn usage_errors_exit_2() {
    let o = vcirc(&["shift", "--lambda", "1,0,1", "--v", "1,a"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("length mismatch"), "{}", o.err);

    let o = vcirc(&["shift", "--lambda", "1,0,1", "--v", "1,b,0"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("\"b\""), "{}", o.err);

    let o = vcirc(&["shift", "--lambda", "1,0,1", "--v", "1,a,0", "--count", "0"]);
    assert_eq!(o.code, 2);

    let o = vcirc(&["ring-check", "--n", "3", "--q", "6"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("6 is not a prime power"), "{}", o.err);

    assert_eq!(vcirc(&["frobnicate"]).code, 2);
    assert_eq!(
        vcirc(&["shift", "--lambda", "1", "--v", "1", "--bogus"]).code,
        2
    );
}

#[test]
fn help_exits_0() {
    let o = vcirc(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("verify-table"));
}

#[test]
fn circulant_outputs() {
    let o = vcirc(&["circulant", "--lambda", "a,0,0,1", "--v", "1,a,0,a"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out, "1,a,0,a\na2,1,a,a\na2,a2,1,0\n0,a2,a2,1\n");
    let o = vcirc(&["circulant", "--lambda", "1,0", "--v", "0,0"]);
    assert_eq!(o.out, "0,0\n0,0\n");
    let v = json(&["circulant", "--lambda", "1,0,1", "--v", "1,a,0"]);
    assert_eq!(v["lambda"], "1,0,1");
    assert_eq!(v["rows"], serde_json::json!(["1,a,0", "0,1,a", "a,0,a2"]));
}

#[test]
fn circulant_over_other_fields() {
    let o = vcirc(&["circulant", "--q", "3", "--lambda", "2,0", "--v", "1,1"]);
    assert_eq!(o.code, 0, "{}", o.err);
    // (0, 1) + 1 * (2, 0) = (2, 1)
    assert_eq!(o.out, "1,1\n2,1\n");
}

#[test]
fn ring_check_passes_and_warns_on_zero_trials() {
    let o = vcirc(&[
        "ring-check",
        "--n",
        "4",
        "--q",
        "4",
        "--trials",
        "1000",
        "--seed",
        "7",
    ]);
    assert_eq!(o.code, 0, "{}{}", o.out, o.err);
    let o = vcirc(&["ring-check", "--n", "3", "--q", "9", "--trials", "0"]);
    assert_eq!(o.code, 0);
    assert!(o.err.contains("warning"), "{}", o.err);
}

#[test]
fn distance_reports_table_rows() {
    let v = json(&[
        "distance",
        "--lambda",
        "1,0,0,0,0,0,0,a",
        "--v",
        "0,a,a2,a2,1,1,1,1",
    ]);
    assert_eq!(v["d"], 4);
    assert_eq!(v["k"], 8);
    assert_eq!(v["classification"], "near-extremal");

    let v = json(&[
        "distance",
        "--lambda",
        "1,0,0,0,0,0,0,0,0,0",
        "--v",
        "0,a,a,1,a,1,1,1,1,1",
    ]);
    assert_eq!(v["d"], 5);

    let o = vcirc(&["distance", "--lambda", "1,0,0,0", "--v", "1,0,0,0"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("d = 1"), "{}", o.out);
}

#[test]
fn distance_of_zero_code_is_an_error() {
    let o = vcirc(&["distance", "--lambda", "1,0", "--v", "0,0"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("k = 0"), "{}", o.err);
}

#[test]
fn verify_table_default_and_files() {
    let o = vcirc(&["verify-table"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("12/12"), "{}", o.out);

    let o = vcirc(&["--format", "csv", "verify-table"]);
    assert_eq!(o.out.lines().count(), 13);

    let dir = tempfile::tempdir().unwrap();
    let tampered = dir.path().join("tampered.tsv");
    let text = DEFAULT_TABLE.replacen("\t4\n", "\t5\n", 1);
    assert_ne!(text, DEFAULT_TABLE);
    std::fs::File::create(&tampered)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let o = vcirc(&["verify-table", "--file", tampered.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.out.contains("FAIL"), "{}", o.out);

    let malformed = dir.path().join("malformed.tsv");
    std::fs::write(&malformed, "4\t1,0,0,1\n").unwrap();
    assert_eq!(
        vcirc(&["verify-table", "--file", malformed.to_str().unwrap()]).code,
        2
    );

    let missing = dir.path().join("missing.tsv");
    assert_eq!(
        vcirc(&["verify-table", "--file", missing.to_str().unwrap()]).code,
        2
    );
}

#[test]
fn search_exhaustive_n4() {
    let v = json(&["search", "--n", "4", "--mode", "exhaustive"]);
    assert_eq!(v["d"], 3);
    assert_eq!(v["candidates_examined"], 65536);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn search_guard_refuses_large_exhaustive() {
    let o = vcirc(&["search", "--n", "9", "--mode", "exhaustive"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("refused"), "{}", o.err);
}

#[test]
fn search_random_is_deterministic_and_bounded() {
    let args = [
        "search", "--n", "13", "--mode", "random", "--seed", "42", "--budget", "2000",
    ];
    let a = vcirc(&[&["--format", "json"], &args[..]].concat());
    let b = vcirc(&[&["--format", "json"], &args[..]].concat());
    assert_eq!(a.code, 0, "{}", a.err);
    assert_eq!(a.out, b.out);
    let r = SearchResult::from_json(&a.out).unwrap();
    assert!(r.d.unwrap() <= 7);
}

#[test]
fn json_round_trips_through_distance() {
    let out = vcirc(&[
        "--format", "json", "search", "--n", "5", "--mode", "random", "--seed", "3", "--budget",
        "500",
    ]);
    let r = SearchResult::from_json(&out.out).unwrap();
    assert!(r.reverify().unwrap());
    let (lambda, v) = (r.lambda.clone().unwrap(), r.v.clone().unwrap());
    let d = json(&["distance", "--lambda", &lambda, "--v", &v]);
    assert_eq!(d["d"].as_u64(), r.d.map(|x| x as u64));
    assert_eq!(d["k"].as_u64(), r.k.map(|x| x as u64));

    let first = json(&["distance", "--lambda", "1,0,0,1", "--v", "1,a,1,1"]);
    let again = json(&[
        "distance",
        "--lambda",
        first["lambda"].as_str().unwrap(),
        "--v",
        first["v"].as_str().unwrap(),
    ]);
    assert_eq!(first, again);
}
