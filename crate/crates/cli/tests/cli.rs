use std::fs;
use std::process::{Command, Output};

use symalg::json::element_from_json;

fn symalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const ONE: &str = "1,0,0,0,0,0,0,0,0";

#[test]
fn norm_of_a_zero_divisor() {
    let o = symalg(&["norm", "--a", "1", "--b", "1", "--coeffs", "1,1,1,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"eta\":\"0\"}\n");
}

#[test]
fn inverse_of_one() {
    let o = symalg(&["inverse", "--a", "1", "--b", "1", "--coeffs", ONE]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"a\":\"1\",\"b\":\"1\",\"coeffs\":[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]}\n");
}

#[test]
fn fibonacci_invertibility_entry() {
    let o = symalg(&["fib", "--n", "5", "--check-invertible"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"n\":5,\"eta\":\"7189232\",\"invertible\":true}\n");
}

#[test]
fn characteristic_polynomial_fields_in_order() {
    let o = symalg(&["charpoly", "--coeffs", "1,2,0,0,0,0,0,0,1"]);
    assert_eq!(stdout(&o), "{\"tau\":\"3\",\"pi\":\"3\",\"eta\":\"10\"}\n");
}

#[test]
fn products_round_trip_through_the_parser() {
    let o = symalg(&["mul", "--a", "0+1*w", "--b", "2", "--coeffs", "1/2,0,-1,0,1-1*w,0,0,3,0", "--coeffs2", "0,1,0,1,0,0,2,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let z = element_from_json(text.trim()).unwrap();
    assert_eq!(symalg::json::element_to_json(&z), text.trim());
}

#[test]
fn file_input_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("z.json");
    let out = dir.path().join("out.json");
    fs::write(&input, r#"{"a":"2","b":"3","coeffs":["0","1","0","0","0","0","0","0","0"]}"#).unwrap();
    let o = symalg(&["mul", "--in", input.to_str().unwrap(), "--in2", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "{\"a\":\"2\",\"b\":\"3\",\"coeffs\":[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]}\n"
    );
}

#[test]
fn domain_errors_exit_with_one() {
    let cases: [&[&str]; 2] = [
        &["inverse", "--coeffs", "1,1,1,0,0,0,0,0,0"],
        &["solve", "--equation", "structured", "--coeffs", "1,1,0,0,0,0,0,0,0", "--coeffs2", "2,1,0,0,0,0,0,0,0"],
    ];
    for args in cases {
        let o = symalg(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1);
    }
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("other.json");
    fs::write(&other, r#"{"a":"1","b":"1","coeffs":["0","1","0","0","0","0","0","0","0"]}"#).unwrap();
    let o = symalg(&["add", "--coeffs", ONE, "--a", "2", "--in2", other.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("different algebras"));
}

#[test]
fn verification_failure_exits_with_one() {
    let o = symalg(&[
        "solve", "--equation", "structured",
        "--coeffs", "1,-2,-2,-2,-2,-1,2,-1,2",
        "--coeffs2", "1,-2,-2,-2,-2,-1,2,2,-1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: solution check failed: X1"));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"a\":\"1\"").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["norm", "--coeffs", "1,x,0,0,0,0,0,0,0"],
        vec!["norm", "--coeffs", "1,0"],
        vec!["norm", "--a", "0", "--coeffs", ONE],
        vec!["norm", "--in", bad.to_str().unwrap()],
        vec!["norm"],
        vec!["twist", "--k", "3", "--coeffs", ONE],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = symalg(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn solver_verdicts() {
    let o = symalg(&["solve", "--equation", "commutator", "--coeffs", "0,1,0,0,0,0,0,0,0", "--coeffs2", ONE]);
    assert_eq!(stdout(&o), "{\"verdict\":\"NoSolution\",\"kernel\":[]}\n");
    let o = symalg(&["solve", "--equation", "commute", "--coeffs", "0,1,0,0,0,0,0,0,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "AffineFamily");
    assert_eq!(v["kernel"].as_array().unwrap().len(), 3);
}

#[test]
fn left_matrix_of_one_is_the_identity() {
    let o = symalg(&["repr", "--kind", "left", "--coeffs", ONE]);
    let cells: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    for (k, c) in cells.iter().enumerate() {
        assert_eq!(c, if k % 10 == 0 { "1" } else { "0" });
    }
}

#[test]
fn same_arguments_same_bytes() {
    let args = ["verify", "--suite", "equations", "--samples", "2", "--seed", "11"];
    let (a, b) = (symalg(&args), symalg(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], 11);
    assert_eq!(report["suite"], "equations");
}

#[test]
fn fibonacci_suite_to_one_hundred() {
    let o = symalg(&["verify", "--suite", "fibonacci", "--nmax", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let scan = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "fibonacci-invertible").unwrap();
    assert_eq!(scan["pass"], true);
}

#[test]
fn corrupted_fixture_fails_the_representation_suite() {
    let mut doc: serde_json::Value = serde_json::from_str(symalg::fixtures::DEFAULT_FIXTURES).unwrap();
    doc["matrices"][0]["entries"][0] = "c1".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.json");
    fs::write(&path, doc.to_string()).unwrap();
    let o = symalg(&["verify", "--suite", "representations", "--samples", "1", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["printed-matrices"]);

    let o = symalg(&["verify", "--suite", "representations", "--samples", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fibonacci_report_carries_the_lemma_table() {
    let o = symalg(&["fib", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 5);
    assert_eq!(v["lemmas"].as_array().unwrap().len(), 24);
    assert!(v["lemmas"].as_array().unwrap().iter().all(|l| l["verified"] == true));
}
