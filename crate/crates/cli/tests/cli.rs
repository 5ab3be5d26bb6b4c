use std::io::Write;
use std::process::{Command, Output, Stdio};

fn permac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permac")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_specializes_to_e21() {
    let o = permac(&["compute", "--shape", "2,1,0", "--basement", "1,3,2", "--q", "1", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1^2*x2 + x1*x2^2 + x1^2*x3 + 3*x1*x2*x3 + x2^2*x3 + x1*x3^2 + x2*x3^2");
}

#[test]
fn compute_zero_shape_is_one() {
    let o = permac(&["compute", "--shape", "0,0", "--basement", "1,2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn both_methods_print_the_same_t_atom() {
    let base = ["compute", "--shape", "2,3,0,1", "--basement", "1,4,2,3", "--q", "0"];
    let a = permac(&base);
    let b = permac(&[&base[..], &["--method", "recursive"]].concat());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).matches(" + ").count(), 6);
}

#[test]
fn json_output_round_trips_through_expand() {
    let o = permac(&["--format", "json", "compute", "--shape", "2,0,1", "--q", "0", "--t", "0"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_permac"))
        .args(["--format", "json", "expand", "--input", "-", "--basis", "key"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 1);
    assert_eq!(v["coeffs"][0]["alpha"], serde_json::json!([2, 0, 1]));
}

#[test]
fn fillings_print_count_last() {
    let o = permac(&["fillings", "--shape", "1,1,0,2", "--basement", "3,1,2,4"]);
    assert_eq!(stdout(&o).lines().last(), Some("count: 8"));
    let o = permac(&["--format", "json", "fillings", "--shape", "2,1,0", "--basement", "1,3,2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 12);
    assert!(v["fillings"][0]["stats"]["coinv"].is_number());
}

#[test]
fn key_into_atoms_has_unit_coefficients() {
    let o = permac(&["expand", "--family", "key", "--shape", "2,0,1", "--basis", "atom"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 * atom(2,1,0) + 1 * atom(1,2,0) + 1 * atom(2,0,1) + 1 * atom(1,0,2)");
}

#[test]
fn hall_littlewood_is_the_rearrangement_sum() {
    let o = permac(&["expand", "--family", "hl", "--shape", "2,1,0", "--basis", "patom_t", "--assert-positive"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("1 * patom_t").count(), 6);
}

#[test]
fn positivity_assertion_fails_on_the_negative_product() {
    let o = permac(&["expand", "--product-schur", "0,3,0-times-key-2,0,1", "--basis", "key", "--assert-positive"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("-1 * key(1,2,3)"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(permac(&["verify", "--suite", "partition", "--n", "3", "--degree", "5"]).status.code(), Some(0));
    assert_eq!(permac(&["verify", "--suite", "negative-example"]).status.code(), Some(0));
    assert_eq!(permac(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(permac(&["verify", "--suite", "oracle", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_deterministic_across_job_counts() {
    let args = ["--format", "json", "verify", "--suite", "operators", "--samples", "20", "--seed", "3"];
    let a = permac(&[&args[..], &["--jobs", "1"]].concat());
    let b = permac(&[&args[..], &["--jobs", "2"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["compute", "--shape", "1,0", "--q", "0.5"],
        vec!["compute", "--shape", "1,0", "--basement", "1,1"],
        vec!["compute", "--shape", "1,0", "--basement", "1,2,3"],
        vec!["expand", "--family", "key", "--shape", "1,0", "--basis", "nope"],
        vec!["compute"],
    ] {
        assert_eq!(permac(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn vanishing_denominator_exits_2() {
    // E_(1,0) carries (1-t)/(1-qt) on x1
    let o = permac(&["compute", "--shape", "1,0", "--q", "1", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("vanishes"));
    let o = permac(&["compute", "--shape", "1,0", "--q", "1", "--t", "1", "--method", "recursive"]);
    assert_eq!(o.status.code(), Some(2));
}
