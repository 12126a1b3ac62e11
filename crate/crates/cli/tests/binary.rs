//! End-to-end runs of the `cfk` binary: exit codes, environment handling
//! and output formats.

use std::process::{Command, Output};

fn cfk(args: &[&str], depth_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cfk"));
    cmd.args(args).env_remove("CFK_DEPTH");
    if let Some(d) = depth_env {
        cmd.env("CFK_DEPTH", d);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_of_t25() {
    let o = cfk(&["invariants", "torus(2,5)"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("tau: 2\n") && text.contains("d1: -2\n"), "{text}");
}

#[test]
fn environment_depth_applies_and_flag_wins() {
    // Depth 1 leaves T(2,7) with a window above zero, where d1 is unreadable.
    let shallow = cfk(&["invariants", "torus(2,7)"], Some("1"));
    assert_eq!(shallow.status.code(), Some(2));
    let flagged = cfk(&["--depth", "30", "invariants", "torus(2,7)"], Some("1"));
    assert!(flagged.status.success());
    assert!(stdout(&flagged).contains("d1: -4\n"));
}

#[test]
fn json_errors_on_stdout() {
    let o = cfk(&["--format", "json", "invariants", "cable(torus(2,5),2,3)"], None);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "elaboration");
}

#[test]
fn plain_errors_on_stderr() {
    let o = cfk(&["show", "torus(2,3"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte 9"));
}

#[test]
fn dot_output() {
    let o = cfk(&["--format", "dot", "show", "torus(2,3)"], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("digraph cfk {"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["--format", "json", "reduce", "sum(torus(2,5), mirror(torus(2,3)))"];
    assert_eq!(cfk(&args, None).stdout, cfk(&args, None).stdout);
}

#[test]
fn verify_subset_exit_status() {
    let o = cfk(&["verify", "--only", "2,3", "--sequential"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert_eq!(cfk(&["verify", "--only", "12"], None).status.code(), Some(2));
}

#[test]
fn examples_by_tag() {
    let o = cfk(&["examples", "d1t25"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ok    d1(T(2,5)) = -2"));
}
