use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn iar() -> Command {
    Command::new(env!("CARGO_BIN_EXE_iar"))
}

fn run(args: &[&str]) -> Output {
    iar().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = iar()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn states_line(hoa: &str) -> &str {
    hoa.lines().find(|l| l.starts_with("States:")).unwrap()
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn translate_iar_on_first_example() {
    let o = run(&["translate", "--mode", "iar", &path("fig1.hoa")]);
    assert!(o.status.success());
    let hoa = stdout(&o);
    assert_eq!(states_line(&hoa), "States: 5");
    assert!(hoa.contains("acc-name: parity max even 6"));
    assert!(hoa.contains("State: 0 \"p,12\""));
}

#[test]
fn default_mode_is_optimized() {
    let o = run(&["translate", &path("fig3.hoa")]);
    assert!(o.status.success());
    assert_eq!(states_line(&stdout(&o)), "States: 3");
}

#[test]
fn initial_record_selects_smaller_output() {
    let o = run(&["translate", "--mode", "iar", "--initial-perm", "3,1,2", &path("fig2.hoa")]);
    assert!(o.status.success());
    assert_eq!(states_line(&stdout(&o)), "States: 3");
}

#[test]
fn other_input_kinds() {
    for name in ["streett.hoa", "gen_rabin.hoa"] {
        let o = run(&["translate", &path(name)]);
        assert!(o.status.success(), "{name}");
        assert!(stdout(&o).contains("acc-name: parity max even"));
    }
}

#[test]
fn check_reports_equivalence() {
    let o = run(&["check", &path("fig1.hoa"), &path("fig1.hoa")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");
}

#[test]
fn check_prints_witness() {
    let o = run(&["check", &path("fig1.hoa"), &path("fig3.hoa")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("not equivalent"));
    let witness = lines.next().unwrap();
    let (_, cycle) = witness.split_once(';').unwrap();
    assert!(!cycle.is_empty());
}

#[test]
fn output_composes_through_pipes() {
    let translated = run(&["translate", &path("fig2.hoa")]);
    assert!(translated.status.success());
    let o = run_with_stdin(&["check", &path("fig2.hoa"), "-", "--lasso", "6"], &translated.stdout);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn parse_errors_exit_with_two() {
    let o = run_with_stdin(&["translate"], b"HOA: v1\nStates: 1\n--BODY--\nState: 0\n[0] 5\n--END--\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn budget_exceeded_exits_with_three() {
    let o = run(&["translate", "--mode", "iar", "--budget", "2", &path("fig1.hoa")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn stats_go_to_stderr() {
    let plain = run(&["translate", "--mode", "iar", &path("fig1.hoa")]);
    let with = run(&["translate", "--mode", "iar", "--stats", &path("fig1.hoa")]);
    assert_eq!(plain.stdout, with.stdout);
    let err = String::from_utf8(with.stderr).unwrap();
    let mut lines = err.lines();
    assert!(lines.next().unwrap().starts_with("instance,mode,states,sccs,max_priority"));
    assert!(lines.next().unwrap().starts_with("0,iar,5,1,5,"));
}

#[test]
fn writes_output_file_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.hoa");
    let o = run(&["translate", "--state-based-output", "-o", out.to_str().unwrap(), &path("fig1.hoa")]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.contains("state-acc"));

    let o = run(&["translate", "--dot", &path("fig3.hoa")]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let args = [
        "bench", "--count", "5", "-Q", "3..5", "--pairs", "1..2", "--seed", "4", "--modes", "iar,iar-star", "--csv",
    ];
    let o = iar().args(args).arg(&csv).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(rows[0].starts_with("instance,mode,"));
    assert_eq!(rows.len(), 1 + 5 * 2);
    assert!(text.contains("# mean_states mode=iar-star"));
    assert!(text.contains("# compared_instances 5"));

    // same seed, same sizes
    let again = dir.path().join("again.csv");
    iar().args(args).arg(&again).output().unwrap();
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.split(',').take(5).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(strip(&text), strip(&std::fs::read_to_string(&again).unwrap()));
}

#[test]
fn rejects_bad_arguments() {
    let o = run(&["translate", "--mode", "iar-star", "--initial-perm", "1,2", &path("fig1.hoa")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["bench", "--modes", "nope"]);
    assert!(!o.status.success());
}
