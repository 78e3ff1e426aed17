//! Golden outputs and exit codes of the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trunc-choice"))
        .current_dir(dir())
        .args(args)
        .output()
        .unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir().join("golden").join(name)).unwrap()
}

fn check(args: &[&str], code: i32, name: &str) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden(name), "{args:?}");
    text
}

#[test]
fn verify_gadget() {
    let text = check(&["verify-gadget"], 0, "verify-gadget.out");
    assert!(text
        .lines()
        .any(|l| l.starts_with("CERT gadget-unsat PASS")));
    for name in [
        "force-u2-456",
        "force-s5-7",
        "force-s8-7",
        "claim-u1-or-v1-low",
    ] {
        assert!(
            text.lines()
                .any(|l| l.starts_with(&format!("CERT {name} PASS"))),
            "{name}"
        );
    }
}

#[test]
fn solve_answers_without_judging() {
    check(
        &[
            "solve",
            "--graph",
            "fixtures/k4.g",
            "--lists",
            "fixtures/k4_123.l",
        ],
        0,
        "solve-k4-unsat.out",
    );
    check(
        &[
            "solve",
            "--graph",
            "fixtures/k4.g",
            "--lists",
            "fixtures/k4_spare.l",
        ],
        0,
        "solve-k4-spare.out",
    );
}

#[test]
fn gallai_check() {
    check(
        &[
            "gallai-check",
            "--graph",
            "fixtures/k4.g",
            "--lists",
            "fixtures/k4_123.l",
        ],
        0,
        "gallai-k4-bad.out",
    );
    check(
        &[
            "gallai-check",
            "--graph",
            "fixtures/k4.g",
            "--lists",
            "fixtures/k4_spare.l",
        ],
        0,
        "gallai-k4-spare.out",
    );
}

#[test]
fn very_nice_and_bipolar_dumps() {
    check(
        &["very-nice", "--graph", "fixtures/dw12.g"],
        0,
        "very-nice-dw12.out",
    );
    check(
        &[
            "bipolar",
            "--graph",
            "fixtures/dw12.g",
            "--s",
            "13",
            "--t",
            "1",
        ],
        0,
        "bipolar-dw12.out",
    );
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "gen",
        "--kind",
        "double-wheel",
        "--rim",
        "12",
        "--seed",
        "7",
    ];
    let a = check(&args, 0, "gen-dw12.out");
    assert_eq!(String::from_utf8(run(&args).stdout).unwrap(), a);
    let t = ["gen", "--kind", "triangulation", "--seed", "3"];
    assert_eq!(run(&t).stdout, run(&t).stdout);
}

#[test]
fn color_success_writes_trace() {
    let trace = std::env::temp_dir().join("trunc-choice-dw12.trace");
    let t = trace.to_str().unwrap();
    check(
        &[
            "color",
            "--graph",
            "fixtures/dw12.g",
            "--lists",
            "fixtures/dw12.l",
            "--trace",
            t,
        ],
        0,
        "color-dw12.out",
    );
    assert_eq!(
        std::fs::read_to_string(&trace).unwrap(),
        golden("color-dw12.trace")
    );
}

#[test]
fn color_failure_exits_three_with_trace() {
    let trace = std::env::temp_dir().join("trunc-choice-stuck.trace");
    let t = trace.to_str().unwrap();
    let out = run(&[
        "color",
        "--graph",
        "fixtures/stuck.g",
        "--lists",
        "fixtures/stuck.l",
        "--k",
        "2",
        "--trace",
        t,
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        golden("color-stuck.err")
    );
    assert_eq!(
        std::fs::read_to_string(&trace).unwrap(),
        golden("color-stuck.trace")
    );
}

#[test]
fn oracle_cap_exits_four() {
    let out = run(&[
        "color",
        "--graph",
        "fixtures/dw12.g",
        "--lists",
        "fixtures/dw12.l",
        "--oracle-cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "solve",
            "--graph",
            "missing.g",
            "--lists",
            "fixtures/k4_123.l"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "color",
            "--graph",
            "fixtures/k4.g",
            "--lists",
            "fixtures/k4_123.l"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn help_documents_grammars() {
    let out = String::from_utf8(run(&["--help"]).stdout).unwrap();
    for token in [
        "STEP <i> RULE <R1|R2>",
        "FREE <component> AT <i>",
        "CERT <name> PASS|FAIL",
        "c <v> <colour>",
        "f <face>",
        "poles <s> <t>",
    ] {
        assert!(out.contains(token), "{token}");
    }
}

#[test]
fn verify_counterexample_emits_files() {
    let tmp = std::env::temp_dir();
    let (g, l, r) = (
        tmp.join("tc-G.g"),
        tmp.join("tc-G.l"),
        tmp.join("tc-G.report"),
    );
    let out = run(&[
        "verify-counterexample",
        "--emit-graph",
        g.to_str().unwrap(),
        "--emit-lists",
        l.to_str().unwrap(),
        "--report",
        r.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(std::fs::read_to_string(&r).unwrap(), text);
    assert!(text.ends_with("VERDICT NOT-8-TRUNCATED-CHOOSABLE\n"));
    assert_eq!(
        text.lines()
            .filter(|l| l.strip_prefix("CERT copy-").is_some_and(|r| r
                .starts_with(|c: char| c.is_ascii_digit())
                && r.contains(" PASS ")))
            .count(),
        56
    );
    let graph = std::fs::read_to_string(&g).unwrap();
    let mut deg = vec![0usize; 1234];
    let mut n = 0;
    for line in graph.lines() {
        let t: Vec<&str> = line.split_whitespace().collect();
        match t.first() {
            Some(&"g") => n = t[1].parse().unwrap(),
            Some(&"e") => {
                deg[t[1].parse::<usize>().unwrap()] += 1;
                deg[t[2].parse::<usize>().unwrap()] += 1;
            }
            _ => {}
        }
    }
    assert_eq!((n, deg[0], deg[1]), (1234, 393, 673));
    let lists = std::fs::read_to_string(&l).unwrap();
    let mut max_colour = 0;
    for line in lists.lines().filter(|l| l.starts_with("l ")) {
        let t: Vec<usize> = line
            .split_whitespace()
            .skip(1)
            .map(|x| x.parse().unwrap())
            .collect();
        let v = t[0];
        assert!(t.len() - 1 >= deg[v].min(8), "list of {v}");
        max_colour = max_colour.max(*t[1..].iter().max().unwrap());
    }
    assert!(max_colour < 15);
}
