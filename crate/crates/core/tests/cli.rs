use std::process::Command;

use enriques_core::cli::{emit_report, run_suite, CliError, Context, Format, Verdict, SCHEMA_VERSION, SUITES};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_enriques-verify"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn quiet(name: &str, filter: Option<&str>) -> Result<enriques_core::cli::SuiteReport, CliError> {
    run_suite(name, filter, &Context::bundled(), &mut |_| {})
}

#[test]
fn report_counts_are_consistent() {
    let r = quiet("gonality", None).unwrap();
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    assert_eq!(r.checks.len(), 3);
    assert_eq!(r.passed + r.failed, r.checks.len());
    assert_eq!(r.verdict, Verdict::Pass);
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.iter().all(|id| id.starts_with("gonality.")));
}

#[test]
fn failing_check_fails_the_suite() {
    let r = quiet("steiner", None).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.failed, 1);
    assert!(!r.check("steiner.arc-completion-unique").unwrap().verdict.passed());
    assert!(r.check("steiner.arc-completions-equivalent").unwrap().verdict.passed());
}

#[test]
fn filter_keeps_prefix_matches() {
    let r = quiet("all", Some("steiner.st-")).unwrap();
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["steiner.st-2-3-9", "steiner.st-3-4-10"]);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.filter.as_deref(), Some("steiner.st-"));

    let mut seen = Vec::new();
    let empty = run_suite("all", Some("nothing"), &Context::bundled(), &mut |s| seen.push(s.to_string())).unwrap();
    assert!(empty.checks.is_empty());
    assert_eq!(empty.verdict, Verdict::Pass);
    assert!(seen.is_empty(), "no suite can match, so none runs");
}

#[test]
fn unknown_suite_is_an_error() {
    let err = quiet("nope", None).unwrap_err();
    assert!(matches!(err, CliError::UnknownSuite(ref s) if s == "nope"));
    assert!(err.to_string().contains("classify"));
    assert_eq!(SUITES.last(), Some(&"all"));
}

#[test]
fn json_report_is_deterministic() {
    let a = emit_report(&quiet("hesse-config", None).unwrap(), Format::Json);
    let b = emit_report(&quiet("hesse-config", None).unwrap(), Format::Json);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "hesse-config");
    assert_eq!(v["verdict"], "fail");
    assert!(v["filter"].is_null());
    let check = &v["checks"][0];
    for key in ["id", "reference", "verdict", "details"] {
        assert!(check.get(key).is_some(), "{key}");
    }
}

#[test]
fn text_report_has_one_line_per_check() {
    let r = quiet("gonality", None).unwrap();
    let text = emit_report(&r, Format::Text);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l.contains("  PASS  ")));
    assert_eq!(lines[3], "suite gonality: 3 passed, 0 failed, verdict PASS");
}

#[test]
fn exit_codes() {
    let (code, out, _) = run(&["verify", "gonality"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("verdict PASS\n"));
    assert_eq!(run(&["verify", "steiner"]).0, 1);
    let (code, _, err) = run(&["verify", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"));
    assert_eq!(run(&["--fixtures", "/nonexistent", "verify", "gonality"]).0, 2);
    assert_eq!(run(&["config", "show", "nope"]).0, 2);
    assert_eq!(run(&["lattice", "show", "E9"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn empty_filter_warns() {
    let (code, out, err) = run(&["verify", "all", "--filter", "nothing"]);
    assert_eq!(code, 0);
    assert!(err.contains("no checks match"));
    assert!(out.contains("0 passed, 0 failed"));
}

#[test]
fn json_to_file() {
    let path = std::env::temp_dir().join(format!("cli-report-{}.json", std::process::id()));
    let (code, out, _) = run(&["verify", "char-p", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, emit_report(&quiet("char-p", None).unwrap(), Format::Json));
}

#[test]
fn fixtures_directory() {
    let dir = std::env::temp_dir().join(format!("cli-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("groups.txt"), include_str!("../fixtures/groups.txt")).unwrap();
    std::fs::write(dir.join("surfaces.txt"), include_str!("../fixtures/surfaces.txt")).unwrap();
    let (code, out, _) = run(&["--fixtures", dir.to_str().unwrap(), "verify", "exact-surfaces"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 0);
    assert!(out.contains("verdict PASS"));
}

#[test]
fn inspection_commands() {
    let (code, out, _) = run(&["lattice", "show", "E8"]);
    assert_eq!(code, 0);
    assert!(out.contains("determinant 1"));
    assert!(out.contains("root type E8 with 240 roots"));

    let (code, out, _) = run(&["groups", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("M12") && l.contains("95040")));

    for name in ["s5", "hesse", "odd-involutions", "steiner"] {
        let (code, out, _) = run(&["config", "show", name]);
        assert_eq!(code, 0, "{name}");
        serde_json::from_str::<serde_json::Value>(&out).unwrap();
    }
}
