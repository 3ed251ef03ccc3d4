//! CLI surface tests: exit-code contract, error messages, JSON round-trips,
//! CSV shape, the SUMSETLAB_CAP override, and golden plain output.

use std::process::Command;

use sumsetlab::{BoundReport, VerificationReport};
use sumsetlab_cli::output::{BoundParams, ComputeParams, ComputeResult, Envelope, VerifyParams};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn sumsetlab(args: &[&str]) -> Run {
    sumsetlab_env(args, &[])
}

fn sumsetlab_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sumsetlab"));
    cmd.args(args);
    for (key, value) in env {
        cmd.env(key, value);
    }
    let output = cmd.output().expect("binary runs");
    Run {
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
        code: output.status.code().expect("exit code"),
    }
}

#[test]
fn compute_plain_golden() {
    let run = sumsetlab(&["compute", "--set", "1,2,3,4", "--alpha", "2"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "variant: at-least\nalpha: 2\nsource-total: 10\ncardinality: 8\nvalues: 3 4 5 6 7 8 9 10\n"
    );
}

#[test]
fn compute_singleton() {
    let run = sumsetlab(&["compute", "--set", "7", "--alpha", "1"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("values: 7\n"));
}

#[test]
fn compute_sequence_cardinality() {
    let run = sumsetlab(&[
        "compute", "--terms", "1,2,3", "--reps", "2,1,3", "--alpha", "3",
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("cardinality: 10\n"), "{}", run.stdout);
}

#[test]
fn compute_json_round_trips() {
    let run = sumsetlab(&[
        "compute", "--terms", "1,2,3", "--reps", "2,1,3", "--alpha", "3", "--format", "json",
    ]);
    assert_eq!(run.code, 0);
    let envelope: Envelope<ComputeParams, ComputeResult> =
        serde_json::from_str(&run.stdout).expect("round-trip");
    assert_eq!(envelope.command, "compute");
    assert_eq!(envelope.parameters.input.reps, Some(vec![2, 1, 3]));
    assert_eq!(envelope.result.cardinality, 10);
    // Lossless re-emission.
    let again = serde_json::to_string_pretty(&envelope).unwrap() + "\n";
    assert_eq!(run.stdout, again);
}

#[test]
fn bound_json_round_trips() {
    let run = sumsetlab(&[
        "bound", "--set", "1,2,4,8", "--alpha", "0", "--format", "json",
    ]);
    assert_eq!(run.code, 0);
    let envelope: Envelope<BoundParams, BoundReport> =
        serde_json::from_str(&run.stdout).expect("round-trip");
    assert_eq!(envelope.result.bound, 11);
    assert_eq!(envelope.result.achieved, Some(16));
    assert_eq!(envelope.result.extremal, Some(false));
    let again = serde_json::to_string_pretty(&envelope).unwrap() + "\n";
    assert_eq!(run.stdout, again);
}

#[test]
fn verify_json_round_trips() {
    let run = sumsetlab(&[
        "verify", "inverse", "--k", "4", "--alpha", "1", "--max", "10", "--format", "json",
    ]);
    assert_eq!(run.code, 0);
    let envelope: Envelope<VerifyParams, VerificationReport> =
        serde_json::from_str(&run.stdout).expect("round-trip");
    assert_eq!(envelope.result.total_candidates, 210);
    assert_eq!(envelope.result.extremal.len(), 2);
    let again = serde_json::to_string_pretty(&envelope).unwrap() + "\n";
    assert_eq!(run.stdout, again);
}

#[test]
fn bound_csv_shape() {
    let run = sumsetlab(&[
        "bound", "--set", "1,2,3,4", "--alpha", "2", "--format", "csv",
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "object,regime,k,alpha,m,bound,achieved,extremal\nset,positive,4,2,,8,8,true\n"
    );
}

#[test]
fn verify_csv_lists_findings() {
    let run = sumsetlab(&[
        "verify", "inverse", "--k", "4", "--alpha", "2", "--max", "12", "--format", "csv",
    ]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "role,elements,alpha,achieved,bound,structure,dilation,exception"
    );
    assert_eq!(lines[1], "extremal,1 2 3 4,2,8,8,dilated-interval-1k,1,");
    assert_eq!(lines.len(), 4);
}

#[test]
fn parse_error_names_the_token() {
    let run = sumsetlab(&["compute", "--set", "1,2,oops", "--alpha", "0"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("'oops'"), "{}", run.stderr);
}

#[test]
fn usage_errors_exit_1() {
    // Missing required input group.
    let run = sumsetlab(&["compute", "--alpha", "0"]);
    assert_eq!(run.code, 1);
    // --terms without --reps.
    let run = sumsetlab(&["compute", "--terms", "1,2", "--alpha", "0"]);
    assert_eq!(run.code, 1);
    // Both input styles at once.
    let run = sumsetlab(&[
        "compute", "--set", "1,2", "--terms", "1,2", "--reps", "1,1", "--alpha", "0",
    ]);
    assert_eq!(run.code, 1);
    // alpha out of range surfaces the range error.
    let run = sumsetlab(&["compute", "--set", "1,2", "--alpha", "5"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("out of range"), "{}", run.stderr);
}

#[test]
fn regime_gate_rejects_mixed_sign_for_bound_and_verify() {
    let run = sumsetlab(&["bound", "--set", "-3,1,2", "--alpha", "0"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("general regime"), "{}", run.stderr);

    // compute accepts the same input.
    let run = sumsetlab(&["compute", "--set", "-3,1,2", "--alpha", "0"]);
    assert_eq!(run.code, 0);
}

#[test]
fn hypothesis_violation_exits_1_unless_explore() {
    let run = sumsetlab(&[
        "verify", "inverse", "--k", "3", "--alpha", "0", "--max", "10",
    ]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("hypothesis"), "{}", run.stderr);

    let run = sumsetlab(&[
        "verify",
        "inverse",
        "--k",
        "3",
        "--alpha",
        "0",
        "--max",
        "10",
        "--explore",
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("extremal: 20"), "{}", run.stdout);
    assert!(run.stdout.contains("mode: explore"));
}

#[test]
fn cap_env_var_is_honored_and_flag_wins() {
    let args = [
        "verify", "direct", "--k", "3", "--alpha", "0", "--max", "10",
    ];
    let run = sumsetlab_env(&args, &[("SUMSETLAB_CAP", "5")]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("exceeds cap 5"), "{}", run.stderr);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--cap", "1000"]);
    let run = sumsetlab_env(&with_flag, &[("SUMSETLAB_CAP", "5")]);
    assert_eq!(run.code, 0);

    let run = sumsetlab_env(&args, &[("SUMSETLAB_CAP", "lots")]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("SUMSETLAB_CAP"), "{}", run.stderr);
}

#[test]
fn universe_smaller_than_k_is_rejected() {
    let run = sumsetlab(&["verify", "direct", "--k", "6", "--alpha", "0", "--max", "4"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("cannot host"), "{}", run.stderr);
}

#[test]
fn output_file_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("sumsetlab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let run = sumsetlab(&[
        "compute",
        "--set",
        "1,2",
        "--alpha",
        "0",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"command\": \"compute\""));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn with_zero_sequence_boundary_alpha_is_noted() {
    let run = sumsetlab(&[
        "verify",
        "inverse",
        "--reps",
        "1,1,1,1,1",
        "--alpha",
        "4",
        "--max",
        "6",
        "--regime",
        "with-zero",
    ]);
    // Every with-zero sequence attains the bound at alpha = n-1, so the
    // sweep reports counterexamples to the literal statement and flags the
    // ambiguity.
    assert_eq!(run.code, 2);
    assert!(
        run.stdout.contains("note: boundary case alpha = n-1"),
        "{}",
        run.stdout
    );
    assert!(
        run.stdout.contains("verdict: counterexample-found"),
        "{}",
        run.stdout
    );
}
