//! Black-box checks of the `ik` binary's published examples and exit codes.

use std::process::Command;

fn ik(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ik"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn dedekind_sum_prints_exact_fraction() {
    let out = ik(&["eval", "dedekind-sum", "--h", "1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1/18");
}

#[test]
fn eta_char_s_matrix_is_trivial() {
    let out = ik(&[
        "eval", "eta-char", "--a", "0", "--b", "-1", "--c", "1", "--d", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("t = 0"));
    assert!(text.contains("value = 1+0i"));
}

#[test]
fn eta_char_forms_agree() {
    for form in ["dedekind", "rademacher"] {
        let out = ik(&[
            "eval", "eta-char", "--a", "1", "--b", "0", "--c", "1", "--d", "1", "--form", form,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(String::from_utf8_lossy(&out.stdout).contains("t = 1/6"));
    }
}

#[test]
fn domain_errors_exit_2() {
    let out = ik(&["eval", "dedekind-sum", "--h", "2", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime"));
}

#[test]
fn usage_errors_exit_2() {
    let out = ik(&["eval", "eta", "--tau", "0,1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ik(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv_is_a_single_table() {
    let out = ik(&["verify", "sawtooth", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,residual,tolerance,passed,skipped,terms_used,lhs,rhs,inputs"
    );
    assert_eq!(lines.count(), 40);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"all_passed\":true"));
}

#[test]
fn tail_eps_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_ik"))
        .args(["eval", "eta", "--tau", "0,1"])
        .env("IK_TAIL_EPS", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("IK_TAIL_EPS"));
}
