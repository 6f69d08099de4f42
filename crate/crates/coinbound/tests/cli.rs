//! End-to-end checks of the binary: one JSON document (or CSV) on stdout,
//! diagnostics on stderr, exit codes 0/1/2/3 and nothing else.

use std::process::{Command, Output};

fn coinbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coinbound"))
        .args(args)
        .env_remove("COINBOUND_CAPACITY")
        .output()
        .expect("binary runs")
}

fn coinbound_with_capacity_env(args: &[&str], capacity: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coinbound"))
        .args(args)
        .env("COINBOUND_CAPACITY", capacity)
        .output()
        .expect("binary runs")
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_str(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn success_writes_json_to_stdout_only() {
    let out = coinbound(&["frobenius", "--m", "3", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":\"1\",\"command\":\"frobenius\",\"input\":{\"m\":3,\"n\":5},\"result\":{\"h\":4,\"g\":7},\"method\":\"formula\"}\n"
    );
}

#[test]
fn frobenius_coin_one_reports_negative_g() {
    let out = coinbound(&["frobenius", "--m", "1", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"result\":{\"h\":0,\"g\":-1}"));
}

#[test]
fn gaps_json_bytes() {
    let out = coinbound(&["gaps", "--m", "3", "--n", "5", "--A", "5", "--B", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":\"1\",\"command\":\"gaps\",\"input\":{\"m\":3,\"n\":5,\"A\":5,\"B\":3},\"result\":{\"gaps\":[1,2,4,7,23,26,28,29],\"lower_gaps\":[1,2,4,7],\"upper_gaps\":[23,26,28,29]},\"case\":\"LargeCoefficients\",\"method\":\"formula\"}\n"
    );
}

#[test]
fn gaps_empty_when_no_gaps() {
    let out = coinbound(&["gaps", "--m", "1", "--n", "2", "--A", "2", "--B", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"gaps\":[]"));
}

#[test]
fn gaps_csv_is_header_plus_one_integer_per_line() {
    let out = coinbound(&[
        "gaps", "--m", "3", "--n", "5", "--A", "2", "--B", "1", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), "gap\n1\n2\n4\n7\n9\n10\n");
}

#[test]
fn represent_examples() {
    let out = coinbound(&[
        "represent", "--m", "3", "--n", "5", "--A", "5", "--B", "3", "--s", "11",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"result\":{\"representable\":true,\"a\":2,\"b\":1}"));

    let out = coinbound(&[
        "represent", "--m", "3", "--n", "5", "--A", "5", "--B", "3", "--s", "23",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"result\":{\"representable\":false}"));

    let out = coinbound(&[
        "represent", "--m", "3", "--n", "5", "--A", "5", "--B", "3", "--s", "31",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(stderr_str(&out).contains("outside the instance range"));
}

#[test]
fn domain_errors_exit_2_with_empty_stdout() {
    for args in [
        &["count", "--m", "4", "--n", "6", "--A", "1", "--B", "1"][..],
        &["count", "--m", "0", "--n", "5", "--A", "1", "--B", "1"],
        &["count", "--m", "3", "--n", "5", "--A", "-1", "--B", "1"],
        &["frobenius", "--m", "-2", "--n", "5"],
    ] {
        let out = coinbound(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        assert!(out.stdout.is_empty(), "args: {args:?}");
        assert!(!out.stderr.is_empty(), "args: {args:?}");
    }
}

#[test]
fn usage_errors_exit_1() {
    // Unknown flag, missing required flag, malformed integer, bad subcommand.
    for args in [
        &["count", "--m", "3", "--n", "5", "--A", "1", "--B", "1", "--bogus"][..],
        &["count", "--m", "3"],
        &["count", "--m", "x", "--n", "5", "--A", "1", "--B", "1"],
        &["transmogrify"],
    ] {
        let out = coinbound(args);
        assert_eq!(out.status.code(), Some(1), "args: {args:?}");
        assert!(out.stdout.is_empty(), "args: {args:?}");
        assert!(!out.stderr.is_empty(), "args: {args:?}");
    }
}

#[test]
fn verify_sweep_passes_and_reports() {
    let out = coinbound(&["verify", "--m-max", "10", "--bound-factor", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("\"command\":\"verify\""));
    assert!(text.contains("\"mismatches\":0"));
    assert!(text.contains("\"skipped\":0"));
}

#[test]
fn verify_empty_domain_is_usage_error() {
    let out = coinbound(&["verify", "--m-max", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_capacity_flag_causes_skips_not_failures() {
    let out = coinbound(&["verify", "--m-max", "4", "--capacity", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("\"capacity\":20"));
    assert!(text.contains("\"mismatches\":0"));
    assert!(!text.contains("\"skipped\":0"));
}

#[test]
fn capacity_env_var_limits_oracle_commands() {
    let out = coinbound_with_capacity_env(
        &["count", "--m", "3", "--n", "5", "--A", "5", "--B", "3", "--method", "oracle"],
        "29",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("exceeds oracle capacity"));

    let out = coinbound_with_capacity_env(
        &["count", "--m", "3", "--n", "5", "--A", "5", "--B", "3", "--method", "oracle"],
        "30",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"count\":23"));
}

#[test]
fn capacity_env_var_must_be_positive_integer() {
    for bad in ["0", "-5", "ten", ""] {
        let out = coinbound_with_capacity_env(&["count", "--m", "2", "--n", "3", "--A", "1", "--B", "1"], bad);
        assert_eq!(out.status.code(), Some(1), "value: {bad:?}");
        assert!(out.stdout.is_empty());
        assert!(stderr_str(&out).contains("COINBOUND_CAPACITY"));
    }
}

#[test]
fn identical_flags_identical_bytes() {
    let args = [
        "verify", "--m-max", "6", "--bound-factor", "1",
    ];
    let first = coinbound(&args);
    let second = coinbound(&args);
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn count_oracle_method_matches_formula() {
    // 102 = 11*7 + 8*9 + 1 - 2*24, confirmed by the oracle route.
    let formula = coinbound(&["count", "--m", "7", "--n", "9", "--A", "11", "--B", "8"]);
    let oracle = coinbound(&[
        "count", "--m", "7", "--n", "9", "--A", "11", "--B", "8", "--method", "oracle",
    ]);
    assert!(stdout_str(&formula).contains("\"count\":102"));
    assert!(stdout_str(&oracle).contains("\"count\":102"));
    assert!(stdout_str(&oracle).contains("\"method\":\"oracle\""));
}
