use std::io::Write;
use std::process::{Command, Output};

fn wordrev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wordrev"))
        .env_remove("WORDREV_BUDGET")
        .args(args)
        .output()
        .expect("binary runs")
}

fn kv(out: &Output) -> Vec<(String, String)> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| l.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

fn get(out: &Output, key: &str) -> Option<String> {
    kv(out).into_iter().find(|(k, _)| k == key).map(|(_, v)| v)
}

#[test]
fn reverse_lists_all_terminals() {
    let out = wordrev(&["--format", "kv", "reverse", "aabb", "a^-1 b a b^-1", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "reverse.terminals").as_deref(), Some("3"));
    let terms: Vec<String> = kv(&out)
        .into_iter()
        .filter(|(k, _)| k.starts_with("reverse.terminal.") && !k.ends_with(".steps"))
        .map(|(_, v)| v)
        .collect();
    assert!(terms.contains(&"b b^-1".to_string()));
    assert!(terms.contains(&"a a b^-1 b^-1".to_string()));
}

#[test]
fn presentation_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "letters: s1 s2\nrel: s1 s2 s1 = s2 s1 s2\npseudolength: unit").unwrap();
    let path = f.path().to_str().unwrap();
    let out = wordrev(&["--format", "kv", "wp-monoid", path, "s1 s2 s1", "s2 s1 s2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "equivalent.value").as_deref(), Some("yes"));
    let out = wordrev(&["--format", "kv", "wp-monoid", path, "s1 s2", "s2 s1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_carry_position() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "letters: a b\nrel: a = z").unwrap();
    let out = wordrev(&["closure", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 10"), "{err}");
}

#[test]
fn divergence_is_a_budget_exit_in_strict_mode() {
    let out = wordrev(&["--format", "kv", "reverse", "bs", "b^-1 a b", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(get(&out, "reverse.budget_exceeded").as_deref(), Some("true"));
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wordrev"))
        .env("WORDREV_BUDGET", "steps=1")
        .args(["--format", "kv", "reverse", "aabb", "a^-1 b a b^-1", "--strict"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn completion_writes_a_parseable_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("hako-complete.pres");
    let out = wordrev(&["--format", "kv", "complete", "hako", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(get(&out, "completion.status").as_deref(), Some("complete"));
    assert_eq!(get(&out, "completion.added").as_deref(), Some("2"));
    let out = wordrev(&["--format", "kv", "check-complete", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "right.verdict").as_deref(), Some("complete"));
    assert_eq!(get(&out, "left.verdict").as_deref(), Some("complete"));
}

#[test]
fn incomplete_presentation_exits_one() {
    let out = wordrev(&["--format", "kv", "check-complete", "heis", "--pseudolength", "inversions a b"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(get(&out, "right.verdict").as_deref(), Some("incomplete"));
}

#[test]
fn wrong_certificate_is_a_precondition_error() {
    let out = wordrev(&["check-complete", "heis", "--pseudolength", "unit"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn group_word_problem() {
    let out = wordrev(&["--format", "kv", "wp-group", "b3", "s1^-1 s2^-1 s1^-1 s2 s1 s2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "trivial.value").as_deref(), Some("yes"));
    let out = wordrev(&["--format", "kv", "wp-group", "b3", "s1^-1 s2 s1 s2^-1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn alternating_reduction() {
    let out = wordrev(&["--format", "kv", "alt-reduce", "nemb", "c'^-1 c^-1 d d'", "--max-alternations", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "reduces").as_deref(), Some("yes"));
    assert_eq!(get(&out, "alternations").as_deref(), Some("2"));
}

#[test]
fn dot_output_has_cells() {
    let out = wordrev(&["reverse", "aabb", "a^-1 b a b^-1", "--first", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("digraph reversing"));
    assert!(text.contains("subgraph cell_1"));
}

#[test]
fn analyze_reports_embedding() {
    let out = wordrev(&["--format", "kv", "analyze", "s3r3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "embeds.value").as_deref(), Some("yes"));
}

#[test]
fn corpus_listing_and_check() {
    let out = wordrev(&["corpus-check", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("aabb"));
    let out = wordrev(&["--format", "kv", "corpus-check", "aabb", "b3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(get(&out, "failed").as_deref(), Some("0"));
}
