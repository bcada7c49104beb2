use std::path::PathBuf;
use std::process::{Command, Output};

fn ordsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ordsum(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn machine(args: &[&str]) -> Vec<String> {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    stdout(&full).lines().map(str::to_string).collect()
}

fn value(lines: &[String], key: &str) -> String {
    let prefix = format!("{key}=");
    lines
        .iter()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in {lines:?}"))
        .to_string()
}

fn write_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const SIX_ELEMENTS: &str = "\
elem x1
elem x2
elem x3
elem x4
elem x5
elem x6
le x2 x1
le x3 x1
le x4 x1
le x5 x2
le x5 x3
le x6 x4
game x1 *1
subst x1 *6
game x2 *2
subst x2 *5
game x3 *3
subst x3 *4
game x4 *4
subst x4 *3
game x5 *5
subst x5 *2
game x6 *6
subst x6 *1
";

#[test]
fn eval_examples() {
    let lines = machine(&[
        "eval",
        "(( *2 + *3 ) :[*2] *5) + (*4 :[*1] *6)",
        "--show",
        "vset",
    ]);
    assert_eq!(lines, vec!["vset=0,1,8,9,10,11,12,13,14,15"]);

    let lines = machine(&["eval", "*0", "--show", "grundy,outcome"]);
    assert_eq!(lines, vec!["grundy=0", "outcome=P"]);

    let full = "*1 :[((*5 + *4) :[*2] *2) + (*3 :[*1] *1)] (((*2 + *3) :[*2] *5) + (*4 :[*1] *6))";
    let lines = machine(&["eval", full, "--show", "grundy,outcome"]);
    assert_eq!(lines, vec!["grundy=2", "outcome=N"]);

    let text = stdout(&["eval", "*1 :[*3] *2"]);
    assert!(text.contains("variation set: {0, 1, 3}"), "{text}");
}

#[test]
fn eval_reports_parse_position() {
    let out = ordsum(&["eval", "*1 + "]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at byte 5"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn check_runs() {
    let text = stdout(&["check", "--count", "500", "--seed", "7"]);
    assert_eq!(text.trim(), "500 passed, 0 failed");
    let text = stdout(&["check", "--count", "0"]);
    assert_eq!(text.trim(), "0 passed, 0 failed");
    let lines = machine(&["check", "--count", "20", "--max-depth", "2"]);
    assert_eq!(value(&lines, "failed"), "0");
}

#[test]
fn corrupted_formula_is_caught() {
    let out = ordsum(&["check", "--count", "100", "--mutant"]);
    assert!(!out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("counterexample"), "{text}");
}

#[test]
fn chain_examples() {
    let lines = machine(&["chain", "--a", "6,3,9,2,1,2,5", "--ahat", "10,1,5,5,0,3"]);
    assert_eq!(value(&lines, "p"), "3");
    assert_eq!(value(&lines, "grundy"), "10");
    assert_eq!(value(&lines, "sigma"), "4,-2,5,-3,0,4,2");

    let lines = machine(&["chain", "--a", "5"]);
    assert_eq!(value(&lines, "grundy"), "5");

    assert!(!ordsum(&["chain", "--a", "1,2", "--ahat", "1,2"])
        .status
        .success());
    assert!(!ordsum(&["chain", "--a", "1,x"]).status.success());
}

#[test]
fn chain_matches_eval_of_chain_text() {
    let cases = [
        (vec![3, 0, 2, 1], vec![2, 3, 0]),
        (vec![1, 1, 1], vec![2, 2]),
        (vec![0, 4, 2], vec![5, 1]),
        (vec![7, 2, 2, 3, 1], vec![0, 4, 4, 1]),
    ];
    for (a, ahat) in cases {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let lines = machine(&["chain", "--a", &join(&a), "--ahat", &join(&ahat)]);
        let mut text = format!("*{}", a[0]);
        for (x, h) in a[1..].iter().zip(&ahat) {
            text.push_str(&format!(" :[*{h}] *{x}"));
        }
        let eval = machine(&["eval", &text, "--show", "grundy"]);
        assert_eq!(value(&lines, "grundy"), value(&eval, "grundy"), "{text}");
    }
}

#[test]
fn tokens_report() {
    let lines = machine(&["tokens", "0,1,2"]);
    assert_eq!(value(&lines, "records"), "1,1,1");
    assert_eq!(value(&lines, "grundy"), "0");
    assert_eq!(value(&lines, "claimed"), "3");
    assert_eq!(value(&lines, "verified"), "yes");

    let lines = machine(&["tokens", "2,0,1"]);
    assert_eq!(value(&lines, "b"), "1,1,0");
    assert_eq!(value(&lines, "grundy"), "2");
    assert_eq!(value(&lines, "search"), "2");

    let lines = machine(&["tokens", "1,0"]);
    assert_eq!(value(&lines, "grundy"), "1");

    assert!(!ordsum(&["tokens", "0,2"]).status.success());
}

#[test]
fn poset_files() {
    let path = write_file("six.poset", SIX_ELEMENTS);
    let lines = machine(&["poset", path.to_str().unwrap()]);
    assert_eq!(lines, vec!["grundy=2", "outcome=N"]);

    let path = write_file("single.poset", "elem a\ngame a *0\nsubst a *0\n");
    let lines = machine(&["poset", path.to_str().unwrap()]);
    assert_eq!(lines, vec!["grundy=0", "outcome=P"]);

    let chain = "elem x1\nelem x2\nelem x3\nle x2 x1\nle x3 x2\n\
                 game x1 *3\nsubst x1 *0\ngame x2 *1\nsubst x2 *2\ngame x3 *2\nsubst x3 *3\n";
    let path = write_file("chain.poset", chain);
    let lines = machine(&["poset", path.to_str().unwrap()]);
    let eval = machine(&["eval", "*3 :[*2] *1 :[*3] *2", "--show", "grundy"]);
    assert_eq!(value(&lines, "grundy"), value(&eval, "grundy"));
}

#[test]
fn poset_errors_name_the_line() {
    let path = write_file("bad.poset", "elem a\nelem b\nle a b\nle b a\n");
    let out = ordsum(&["poset", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let out = ordsum(&["poset", "/nonexistent/file.poset"]);
    assert!(!out.status.success());
}

#[test]
fn state_cap_is_enforced() {
    let path = write_file("capped.poset", SIX_ELEMENTS);
    let out = ordsum(&["poset", path.to_str().unwrap(), "--state-cap", "10"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"), "{err}");
}
