use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const E2: &str = "x''' - 5x'' + 3x' + 9x = t^5e^(3t)";
const E1: &str = "x'' - 2x' + 2x = t^2e^(t)sin(3t + 5)";

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_expshift"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("expshift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solves_e2() {
    let out = run(&["solve", E2], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "(t^7/168 - t^6/96 + t^5/64 - 5t^4/256 + 5t^3/256 - 15t^2/1024)e^(3t)\n"
    );
}

#[test]
fn trace_and_general_solution() {
    let out = run(&["solve", "--trace", "--roots", "3:2,-1", E2], None);
    let text = stdout(&out);
    assert!(text.contains("reduced_solve: Q''' + 4*Q'' = t^5"), "{text}");
    assert!(text.contains("general: c1*e^(3t) + c2*te^(3t) + c3*e^(-t) + ("), "{text}");
}

#[test]
fn homogeneous_equation_has_zero_particular_solution() {
    let out = run(&["solve", "x' = 0"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn printed_e1_solution_fails_verification() {
    let candidate =
        temp_file("e1.txt", "(-t^2/6 + 16/27)e^(t)cos(3t + 5) + (-4t/9 + 1/18)e^(t)sin(3t + 5)");
    let out = run(&["verify", E1, "--solution", candidate.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let golden = include_str!("../../core/tests/golden/e1_residual.txt").trim();
    assert_eq!(stdout(&out), format!("fail\nresidual: {golden}\n"));
}

#[test]
fn solve_output_verifies() {
    for (i, problem) in [E1, E2, "x'' + 2x' + 2x = e^(-t)sin(t) + 3t - 1"].iter().enumerate() {
        let plain = stdout(&run(&["solve", problem], None));
        let path = temp_file(&format!("plain{i}.txt"), &plain);
        let out = run(&["verify", problem, "--solution", path.to_str().unwrap()], None);
        assert_eq!(stdout(&out), "pass\n", "{problem}");
        assert_eq!(out.status.code(), Some(0));

        let doc = stdout(&run(&["solve", "--format", "structured", "-"], Some(problem)));
        let path = temp_file(&format!("doc{i}.json"), &doc);
        let out = run(&["verify", problem, "--solution", path.to_str().unwrap()], None);
        assert_eq!(out.status.code(), Some(0), "{problem}");
    }
}

#[test]
fn structured_problem_input() {
    let doc = stdout(&run(&["solve", "--format", "structured", E2], None));
    let path = temp_file("problem.json", &doc);
    let out = run(&["solve", "--input", path.to_str().unwrap()], None);
    assert_eq!(stdout(&out), stdout(&run(&["solve", E2], None)));
}

#[test]
fn output_is_deterministic() {
    for format in ["plain", "latex", "structured"] {
        let a = run(&["solve", "--trace", "--format", format, E1], None);
        let b = run(&["solve", "--trace", "--format", format, E1], None);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn bad_input_reports_position() {
    let out = run(&["solve", "x'' = t^2 e^(3t"], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: at position 15:"), "{err}");
}

#[test]
fn homogeneous_basis_and_rejected_root() {
    let out = run(&["homogeneous", "x'' - 2x' + 2x", "--roots", "1+i"], None);
    assert_eq!(stdout(&out), "e^(t)cos(t)\ne^(t)sin(t)\n");
    let out = run(&["homogeneous", E2, "--roots", "3:2,-1:1"], None);
    assert_eq!(stdout(&out), "e^(3t)\nte^(3t)\ne^(-t)\n");
    let out = run(&["homogeneous", "x'' - 2x' + 2x", "--roots", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a root"));
}
