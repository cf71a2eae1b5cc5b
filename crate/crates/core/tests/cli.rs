use std::process::{Command, Output};

fn eulerian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerian")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_examples() {
    let out = eulerian(&["gen", "--family", "D", "--n", "4", "--route", "recurrence", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last(), Some("4,1,36,118,36,1"));

    let out = eulerian(&["gen", "--family", "BrentiD", "--n", "4", "--route", "brute"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last(), Some("4,1,44,102,44,1"));

    let out = eulerian(&["gen", "--family", "A", "--n", "0"]);
    assert_eq!(stdout(&out), "0,1\n");
}

#[test]
fn gen_formats() {
    let out = eulerian(&["gen", "--family", "B", "--n", "2", "--format", "bfile", "--offset", "1"]);
    assert_eq!(stdout(&out), "1 1\n2 1\n3 1\n4 1\n5 6\n6 1\n");
    let out = eulerian(&["gen", "--family", "B", "--n", "1", "--format", "json"]);
    assert_eq!(stdout(&out), "[[\"1\"],[\"1\",\"1\"]]\n");
}

#[test]
fn gen_errors() {
    for (args, code) in [
        (&["gen", "--family", "A", "--n", "3", "--route", "derived"][..], 2),
        (&["gen", "--family", "BrentiD", "--n", "3", "--route", "closed"][..], 2),
        (&["gen", "--family", "Q", "--n", "3"][..], 2),
        (&["gen", "--family", "B", "--n", "9", "--route", "brute", "--budget", "1000"][..], 3),
    ] {
        assert_eq!(eulerian(args).status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn budget_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_eulerian"))
        .args(["gen", "--family", "D", "--n", "6", "--route", "brute"])
        .env("EULERIAN_ENUM_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_examples() {
    let out = eulerian(&["check", "--suite", "identities", "--n-max", "15"]);
    assert_eq!(out.status.code(), Some(0));

    let out = eulerian(&["check", "--suite", "moments", "--t", "1/2,2", "--tol", "1e-9"]);
    assert_eq!(out.status.code(), Some(0));

    let out = eulerian(&["check", "--suite", "conjectures", "--n-max", "25"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no violations found (empirical)"));
}

#[test]
fn check_json_report() {
    let out = eulerian(&["check", "--suite", "conjectures", "--n-max", "10", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["passed"], true);
    assert_eq!(value["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn check_rejects_decimals() {
    assert_eq!(eulerian(&["check", "--suite", "moments", "--t", "0.5"]).status.code(), Some(2));
    assert_eq!(eulerian(&["check", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn hankel_examples() {
    let out = eulerian(&["hankel", "--family", "B", "--t", "1", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("minor 2 = 4\nminor 3 = 256\n"));
    assert!(text.ends_with("PASS (all minors positive)\n"));

    let out = eulerian(&["hankel", "--family", "A", "--t", "0", "--m", "2"]);
    assert!(stdout(&out).contains("minor 2 = 0\nPASS (nonnegative)"));

    let out = eulerian(&["hankel", "--family", "Dtilde", "--t", "1/2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("expected-negative"));

    assert_eq!(eulerian(&["hankel", "--family", "A", "--t", "1", "--m", "0"]).status.code(), Some(2));
}
