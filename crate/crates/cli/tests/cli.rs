use std::path::Path;
use std::process::Command;

use heightlab::parse_bipoly;
use heightlab_cli::{run_from, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_from(std::iter::once("heightlab").chain(args.iter().copied()))
}

fn run_json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.push("--json");
    let out = run(&v);
    assert!(out.code <= 1, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../schemas/{name}.schema.json"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name}: {msgs:?}\n{v:#}");
}

#[test]
fn text_examples() {
    assert_eq!(run(&["height", "3/2"]).stdout.split(' ').next(), Some("1.098612"));
    assert_eq!(run(&["hp", "x^2 - y^2 - 1"]).stdout, "0.000000\n");
    assert!(run(&["cp", "y^2 - x^3 + x"]).stdout.starts_with("9.837"));
    assert!(run(&["height", "root(x^2 - 6, 1)"]).stdout.starts_with("0.895880"));
    let out = run(&["verify-quasi", "x^2 - y^3", "--x-values", "8,27,125"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().filter(|l| l.starts_with("x =")).all(|l| l.contains("lhs = 0.000000")));
}

#[test]
fn quasi_example_value() {
    let v = run_json(&["verify-quasi", "y^2 - x^3 + x", "--x-values", "2"]);
    let r = &v[0];
    assert_eq!(r["verdict"], "holds");
    // y = √6, so |h(x)/q − h(y)/p| = |ln 2 / 2 − (ln 6 / 2) / 3|
    let want = (2f64.ln() / 2.0 - 6f64.ln() / 6.0).abs();
    assert!((r["lhs"].as_f64().unwrap() - want).abs() < 1e-9);
}

#[test]
fn construct_aux_example() {
    let v = run_json(&["construct-aux", "x - y - 1", "--m", "3", "--n", "3"]);
    assert_eq!(parse_bipoly(v["A"].as_str().unwrap()).unwrap(), parse_bipoly("1").unwrap());
    assert_eq!(parse_bipoly(v["B"].as_str().unwrap()).unwrap(), parse_bipoly("(x - 1)^3").unwrap());
    let out = run(&["construct-aux", "x - y - 1", "--m", "2", "--n", "3"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("m ≥ 2q+1"));
    let v = run_json(&["construct-aux", "x - y^2 - 1", "--auto", "--k", "60"]);
    assert_eq!(v["t"], 2);
    assert_eq!(run(&["construct-aux", "y^2 - x^3 + x", "--auto", "--k", "70"]).code, 4);
    assert_eq!(run(&["construct-aux", "y^2 - x^3 + x", "--auto", "--k", "1"]).code, 3);
}

#[test]
fn runge_examples() {
    let v = run_json(&["runge", "check", "x^2 - 2*y^2 - 1"]);
    assert_eq!(v["condition"], false);
    let v = run_json(&["runge", "solve", "x^2 - y^2 - 1", "--limit", "10000"]);
    assert_eq!(v["points"], serde_json::json!([[-1, 0], [1, 0]]));
    assert!((v["bound_log"].as_f64().unwrap() - 2550.8).abs() < 0.1);
    assert_eq!(run(&["runge", "bound", "x^2 - 2*y^2 - 1"]).code, 3);
    let v = run_json(&["runge", "certify", "x^2 - y^2 - 1", "--limit", "10000"]);
    assert!(v["certificate"].as_str().unwrap().starts_with("complete within"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hp", "x^2 +* y"]).code, 2);
    assert!(run(&["hp", "x^2 +* y"]).stderr.contains("position 5"));
    assert_eq!(run(&["height", "root(x^2 - 1, 0)"]).code, 3);
    assert_eq!(run(&["verify-quasi", "x^2 - y^2", "--x-values", "2"]).code, 3);
    assert_eq!(run(&["verify-quasi", "x^2 - y^2", "--x-values", "2", "--assume-irreducible"]).code, 0);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["vanish-order", "y - x^2", "--aux", "y", "--point", "1,0"]).code, 3);
}

#[test]
fn resource_cap_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_heightlab"))
        .args(["construct-aux", "y^2 - x^3 + x", "--m", "5", "--n", "8"])
        .env("HEIGHTLAB_BITS_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_heightlab")).args(["hp", "x*y - 1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0.000000\n");
}

#[test]
fn printed_polynomials_reparse() {
    let v = run_json(&["construct-aux", "y^2 - x^3 + x", "--m", "5", "--n", "8"]);
    let p = parse_bipoly("y^2 - x^3 + x").unwrap();
    let a = parse_bipoly(v["A"].as_str().unwrap()).unwrap();
    let b = parse_bipoly(v["B"].as_str().unwrap()).unwrap();
    let q = parse_bipoly(v["Q"].as_str().unwrap()).unwrap();
    assert_eq!(&a.mul_monomial(0, 5) - &b, &p * &q);
    for s in [v["A"].as_str().unwrap(), v["B"].as_str().unwrap()] {
        assert_eq!(parse_bipoly(s).unwrap().to_text(), s);
    }
    let v = run_json(&["transform", "y^2 - x^3 + x", "--xi", "-1"]);
    let r = parse_bipoly(v["result"].as_str().unwrap()).unwrap();
    assert_eq!(r.to_text(), v["result"]);
    assert_eq!(v["total_degree"], 5);
}

#[test]
fn json_outputs_match_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("height", &["height", "root(x^3 - x - 1, 0)"]),
        ("hp", &["hp", "2*x^2 - 5*x*y + 2*y^2 - 1"]),
        ("cp", &["cp", "y^2 - x^3 + x"]),
        ("threshold", &["threshold", "y^2 - x^3 + x"]),
        ("verify_quasi", &["verify-quasi", "y^2 - x^3 + x", "--samples", "6", "--seed", "3"]),
        ("construct_aux", &["construct-aux", "x - y - 1", "--m", "3", "--n", "3"]),
        ("vanish_order", &["vanish-order", "y - x^2", "--aux", "y", "--point", "0,0"]),
        ("vanish_order", &["vanish-order", "x - y - 1", "--aux", "1", "--point", "1,0", "--m", "3", "--n", "3"]),
        ("singular", &["singular", "y^2 - x^3 - x^2"]),
        ("transform", &["transform", "y^2 - x^3 + x", "--xi", "1/2"]),
        ("factor", &["factor", "x^4 - 1"]),
        ("runge_check", &["runge", "check", "x^2 - y^2 - 1"]),
        ("runge_check", &["runge", "check", "x*y - 1"]),
        ("runge_bound", &["runge", "bound", "x^2 - y^2 - 1"]),
        ("runge_solve", &["runge", "solve", "x^2 - y^2 - 5", "--limit", "50"]),
        ("runge_certify", &["runge", "certify", "2*x^2 - 5*x*y + 2*y^2 - 1", "--limit", "50"]),
        ("runge_certify", &["runge", "certify", "x^2 - 2*y^2 - 1", "--limit", "50"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &run_json(args));
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["verify-quasi", "x^3 + y^3 - 7", "--samples", "12", "--seed", "9", "--json"];
    let one = run(&[&base[..], &["--threads", "1"]].concat());
    let four = run(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
    let other_seed = run(&["verify-quasi", "x^3 + y^3 - 7", "--samples", "12", "--seed", "10", "--json"]);
    assert_ne!(one.stdout, other_seed.stdout);
}
