use crofton_cli::{run_args, Outcome};
use serde_json::Value;

fn run(args: &str) -> Outcome {
    run_args(std::iter::once("crofton").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn selberg_n2_ratfun() {
    let v = json("selberg-I --n 2");
    assert_eq!(v["result"]["ratfun"], "4/((s+1)(2s+3))");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["exponent_encoding"], "doubled");
    assert_eq!(v["config"]["command"], "selberg-I");
}

#[test]
fn d_sgn_odd_is_zero() {
    let v = json("D --n 3 --kind sgn");
    assert_eq!(v["result"]["identically_zero"], true);
}

#[test]
fn mu_c_exit_zero() {
    let v = json("mu-c-vanishing --m 2");
    assert_eq!(v["result"]["certified"], true);
}

#[test]
fn failed_certificate_exits_two() {
    let out = run("q2-certificate --p 7 --k 4");
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("certification failed"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "certification_failed");
    assert_eq!(json("q2-certificate --p 7 --k 3")["status"], "ok");
}

#[test]
fn usage_errors_exit_one() {
    for args in ["D --n 2 --kind bogus", "D-mc --n 2 --s 1", "nonsense", "selberg-I"] {
        let out = run(args);
        assert_eq!(out.code, 1, "{args}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(run("--help").code, 0);
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        "D-mc --n 2 --s 1 --samples 5000 --seed 9",
        "sample-grassmann --p 2 --q 2 --k 2 --seed 1 --samples 4 --format csv",
        "project-mc --p 3 --q 2 --k 2 --a 1 --b 0.5 --samples 5000 --seed 2",
        "residue-check --identity 3 --seed 5 --count 20",
    ] {
        assert_eq!(run(args), run(args), "{args}");
    }
}

#[test]
fn workers_do_not_change_output() {
    let base = "D-mc --n 3 --s 2 --samples 4000 --seed 3";
    let one = run(&format!("{base} --workers 1"));
    let four = run(&format!("{base} --workers 4"));
    assert_eq!(one, four);
}

#[test]
fn csv_has_header_comment_and_rows() {
    let out = run("mu-c-vanishing --m 2 --format csv");
    let mut lines = out.stdout.lines();
    assert!(lines.next().unwrap().starts_with("# schema_version=1 command=mu-c-vanishing"));
    assert_eq!(lines.next().unwrap(), "denominator,kappa,net,numerator");
    assert_eq!(lines.next().unwrap(), "1,0 0 0,1,2");
}

#[test]
fn precision_rounds_floats() {
    let v = json("u-eval --s -2.5 --a 1 --b 0 --precision 3");
    let x = v["result"]["value"].as_f64().unwrap();
    assert_eq!(format!("{x:.3e}").parse::<f64>().unwrap(), x);
    assert_eq!(format!("{:.2e}", x).parse::<f64>().unwrap(), x);
}

#[test]
fn pairing_commands() {
    assert_eq!(json("universal-pairing --family abs --index 1")["result"]["exact_value"], "-2");
    assert_eq!(json("centroaffine --p 2")["result"]["exact_value"], "-4/3");
    let out = run("universal-pairing --family cos --index 3");
    assert_eq!(out.code, 1);
}

#[test]
fn exact_evaluations() {
    assert_eq!(json("D --n 2 --kind abs --s 1")["result"]["value"]["exact"], "2/5*pi");
    assert_eq!(json("gamma-kappa --n 3 --kappa 1,1,0 --x -2")["result"]["pole_order"], 2);
    let f = json("f-eval --e 1,2 --recursive");
    assert_eq!(f["result"]["agree"], true);
    assert_eq!(json("residue-check --identity 1 --a 1,2/3,-5")["result"]["holds"], true);
}
