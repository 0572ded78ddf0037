mod common;

use std::path::Path;

use coxforge::census::Census;
use coxforge::cli::run;

use common::data_dir;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["coxforge".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data(name: &str) -> String {
    data_dir().join(format!("{name}.cox")).to_string_lossy().into_owned()
}

fn path(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["order", &data("a3"), "--bogus"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn runtime_errors_exit_1() {
    let (code, _, err) = call(&["validate", "/nonexistent.cox"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    assert_eq!(call(&["order", &data("a3"), "--subset", "s1,zz"]).0, 1);
    assert_eq!(call(&["blowup", &data("a3"), "--base", "s1"]).0, 1);
}

#[test]
fn orders_and_words() {
    let (code, out, _) = call(&["order", &data("f4")]);
    assert_eq!((code, out.trim()), (0, "1152"));
    let (code, out, _) = call(&["order", &data("c3"), "--enumerate"]);
    assert_eq!((code, out.trim()), (0, "48"));
    let (_, out, _) = call(&["order", &data("free3")]);
    assert_eq!(out.trim(), "inf");
    let (code, out, _) = call(&["reduce", &data("a3"), "s1", "s2", "s1", "s2", "s1", "s2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
}

#[test]
fn json_output_parses() {
    let (code, out, _) = call(&["--json", "classify", &data("hub")]);
    assert_eq!(code, 0);
    serde_json::from_str::<serde_json::Value>(&out).unwrap();
}

#[test]
fn census_json_round_trips() {
    let (code, out, _) = call(&["--json", "census", &data("c3_tame")]);
    assert_eq!(code, 0);
    let c = Census::from_json(&out).unwrap();
    assert_eq!(c.rank, 5);
    assert!(!c.entries.is_empty());
    assert_eq!(call(&["census", &data("c3_tame"), "--compare", &data("c3_tame")]).0, 0);
    assert_eq!(call(&["census", &data("c3_tame"), "--compare", &data("a3")]).0, 1);
}

#[test]
fn maxrank_lineage_verifies_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let lin = dir.path().join("run.lineage");
    let (code, out, _) = call(&["maxrank", &data("c3_tame"), "--out", &path(&lin)]);
    assert_eq!(code, 0);
    assert!(out.contains("# step 1"), "{out}");
    assert_eq!(call(&["verify", &data("c3_tame"), &path(&lin)]).0, 0);

    assert_eq!(call(&["verify", &data("a3"), &path(&lin)]).0, 1);

    let text = std::fs::read_to_string(&lin).unwrap();
    let bad: Vec<String> = text
        .lines()
        .map(|l| if l.starts_with("def ") { format!("{l} {}", l.split_whitespace().last().unwrap()) } else { l.to_string() })
        .collect();
    let tampered = dir.path().join("bad.lineage");
    std::fs::write(&tampered, bad.join("\n")).unwrap();
    assert_eq!(call(&["verify", &data("c3_tame"), &path(&tampered)]).0, 1);
}

#[test]
fn twist_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let lin = dir.path().join("t.lineage");
    let (code, _, err) = call(&["twist", &data("twist_a2"), "--s1", "x,p,q", "--s0", "p,q", "--bullet", "p,q", "--out", &path(&lin)]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(call(&["verify", &data("twist_a2"), &path(&lin)]).0, 0);
    assert_eq!(call(&["twist", &data("twist_a2"), "--s1", "x,p", "--s0", "p"]).0, 1);

    let (code, out, _) = call(&["decompose", &data("square"), "--dot"]);
    assert_eq!(code, 0);
    assert!(out.contains("graph"), "{out}");
}

#[test]
fn dot_views() {
    for view in ["p", "c"] {
        let (code, out, _) = call(&["dot", &data("c3"), "--view", view]);
        assert_eq!(code, 0);
        assert!(out.contains("graph"));
    }
}
