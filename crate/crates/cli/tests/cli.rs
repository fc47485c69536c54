use std::process::Command;

use proptest::prelude::*;
use psi_umbral::{Poly, Rational};
use psi_umbral_cli::{format_poly, parse_poly, run};

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_psi-umbral"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn binary_exit_codes() {
    let ok = binary(&["bern-numbers", "--family", "fib", "--count", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    // n = 4 row: 1 + 3·(-1) + 6·(1/2) + 3·B_3 = 0
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "B_0 = 1\nB_1 = -1\nB_2 = 1/2\nB_3 = -1/3\n"
    );

    let math = binary(&["bern-numbers", "--family", "q:-1", "--count", "2"]);
    assert_eq!(math.status.code(), Some(2));
    assert!(math.stdout.is_empty());

    let usage = binary(&["bern-numbers", "--family", "classical"]);
    assert_eq!(usage.status.code(), Some(1));

    let parse = binary(&["solve", "--family", "classical", "--phi", "2x +* 1"]);
    assert_eq!(parse.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("column 5"));
}

#[test]
fn table_json_schema() {
    let out = run([
        "bern-numbers",
        "--family",
        "q:2",
        "--count",
        "2",
        "--method",
        "both",
        "--out",
        "json",
    ]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["family"], "q:2");
    assert_eq!(v["method"], "both");
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    assert_eq!(values[1]["n"], 1);
    assert_eq!(values[2]["value"], "4/21");
}

#[test]
fn solve_json_schema() {
    let out = run([
        "solve",
        "--family",
        "classical",
        "--phi",
        "x",
        "--out",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["family"], "classical");
    assert_eq!(v["phi"], "x");
    assert_eq!(v["f"], "1/2x^2 - 1/2x + 1/12");
    assert_eq!(v["kernel"], "constants");
    assert_eq!(v["verified"], true);
}

#[test]
fn csv_outputs() {
    let out = run([
        "bern-numbers",
        "--family",
        "classical",
        "--count",
        "2",
        "--out",
        "csv",
    ]);
    assert_eq!(out.stdout, "n,value\n0,1\n1,-1/2\n2,1/6\n");
    let out = run(["binom-table", "--family", "q:2", "-n", "4", "--out", "csv"]);
    assert_eq!(out.stdout.lines().last(), Some("4,1,15,35,15,1"));
}

#[test]
fn gf_method_and_bern_poly() {
    let rec = run(["bern-numbers", "--family", "q:1/2", "--count", "8"]);
    let gf = run([
        "bern-numbers",
        "--family",
        "q:1/2",
        "--count",
        "8",
        "--method",
        "gf",
    ]);
    assert_eq!(rec.stdout, gf.stdout);
    let out = run(["bern-poly", "--family", "fib", "-n", "2"]);
    assert_eq!(
        out.stdout,
        "B_0(x) = 1\nB_1(x) = x - 1\nB_2(x) = x^2 - x + 1/2\n"
    );
}

#[test]
fn powersum_command() {
    let out = run([
        "powersum",
        "--family",
        "classical",
        "-n",
        "3",
        "-r",
        "2",
        "--verify",
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("S(n=3, r=2) = 5\n"));
    assert!(out.stdout.contains("agrees"));
    assert_eq!(
        run(["powersum", "--family", "fib", "-n", "3", "-r", "0"]).code,
        1
    );
}

#[test]
fn custom_family() {
    let out = run(["bern-numbers", "--family", "custom:1,3,2", "--count", "2"]);
    assert_eq!(out.code, 0, "{out:?}");
    // B_1 = -1/C(2,1)_ψ = -1/2_ψ
    assert!(out.stdout.starts_with("B_0 = 1\nB_1 = -1/3\n"));
    let beyond = run(["bern-numbers", "--family", "custom:1,3,2", "--count", "5"]);
    assert_eq!(beyond.code, 2);
    let zero = run(["binom-table", "--family", "custom:1,0", "-n", "1"]);
    assert_eq!(zero.code, 2);
}

#[test]
fn check_single_family_and_suite() {
    let out = run([
        "check",
        "--suite",
        "powersum",
        "--family",
        "q:-2/3",
        "--max-degree",
        "4",
    ]);
    assert_eq!(out.code, 0, "{out:?}");
    assert_eq!(
        out.stdout.lines().filter(|l| l.starts_with("PASS")).count(),
        1
    );
    assert_eq!(run(["check", "--suite", "nonsense"]).code, 1);
}

#[test]
fn solve_negative_leading_term() {
    let out = run(["solve", "--family", "q:0", "--phi", "-x^2 + 1/3"]);
    assert_eq!(out.code, 0, "{out:?}");
    // q = 0: Δ is the divided difference, ∫ x^n = x^{n+1}
    let f = out.stdout.lines().next().unwrap();
    assert!(f.starts_with("f(x) = -x^3"), "{f}");
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn parse_format_round_trip(cs in prop::collection::vec(rational(), 0..=11)) {
        let p = Poly::from_coeffs(cs);
        prop_assert_eq!(parse_poly(&format_poly(&p)).unwrap(), p);
    }

    #[test]
    fn whitespace_is_ignored(cs in prop::collection::vec(rational(), 1..=6)) {
        let p = Poly::from_coeffs(cs);
        let spaced = format_poly(&p)
            .replace('x', " x ")
            .replace('^', " ^ ")
            .replace('/', "\t/ ");
        prop_assert_eq!(parse_poly(&spaced).unwrap(), p);
    }
}
