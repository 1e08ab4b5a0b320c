// SPDX-License-Identifier: Apache-2.0
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/jotter")
}

fn guiloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_guiloc"))
        .arg("-q")
        .args(args)
        .output()
        .unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build_index(dir: &Path) -> PathBuf {
    let idx = dir.join("index.json");
    let f = fixture();
    let out = guiloc(&[
        "index",
        "--corpus",
        s(&f.join("app")),
        "--traces",
        s(&f.join("traces")),
        "--out",
        s(&idx),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    idx
}

fn localize_args<'a>(idx: &'a Path, f: &'a Path) -> Vec<String> {
    [
        "localize".to_string(),
        "--index".into(),
        s(idx).into(),
        "--report".into(),
        s(&f.join("reports/R01.json")).into(),
        "--trace".into(),
        s(&f.join("traces/R01.json")).into(),
    ]
    .to_vec()
}

fn run(args: &[String]) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    guiloc(&refs)
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let idx = build_index(tmp.path());
    let f = fixture();
    let base = localize_args(&idx, &f);

    assert_eq!(run(&base).status.code(), Some(0));

    let mut bad = base.clone();
    bad.extend(["--rerank".into(), "bogus".into()]);
    assert_eq!(run(&bad).status.code(), Some(2));

    let mut zero = base.clone();
    zero.extend(["--window".into(), "0".into()]);
    assert_eq!(run(&zero).status.code(), Some(2));

    let missing = localize_args(&tmp.path().join("absent.json"), &f);
    assert_eq!(run(&missing).status.code(), Some(1));

    assert_eq!(guiloc(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn config_file_then_flags() {
    let tmp = tempfile::tempdir().unwrap();
    let idx = build_index(tmp.path());
    let cfg = tmp.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"scorer": "rvsm", "top_k": 4, "query_strategy": "expand"}"#).unwrap();
    let mut args = localize_args(&idx, &fixture());
    args.extend(["--config".into(), s(&cfg).into(), "--top".into(), "2".into()]);
    let out = run(&args);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["scorer"], "rvsm");
    assert_eq!(v["config"]["query_strategy"], "expand");
    assert_eq!(v["config"]["top_k"], 2);
    assert_eq!(v["ranking"].as_array().unwrap().len(), 2);

    std::fs::write(&cfg, r#"{"scorer": "rvsm", "topk": 4}"#).unwrap();
    let mut args = localize_args(&idx, &fixture());
    args.extend(["--config".into(), s(&cfg).into()]);
    assert_eq!(run(&args).status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout_and_context_dump() {
    let tmp = tempfile::tempdir().unwrap();
    let idx = build_index(tmp.path());
    let args = localize_args(&idx, &fixture());
    let stdout = run(&args).stdout;
    let mut to_file = args.clone();
    let out = tmp.path().join("ranking.json");
    let ctx = tmp.path().join("context.json");
    to_file.extend(["--out".into(), s(&out).into(), "--dump-context".into(), s(&ctx).into()]);
    let res = run(&to_file);
    assert!(res.status.success());
    assert!(res.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), stdout);
    let ctx: serde_json::Value = serde_json::from_slice(&std::fs::read(&ctx).unwrap()).unwrap();
    assert!(ctx["terms"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn model_lint_and_evaluate() {
    let tmp = tempfile::tempdir().unwrap();
    let idx = build_index(tmp.path());
    let f = fixture();
    let model = tmp.path().join("model.json");
    assert!(
        guiloc(&["build-model", "--traces", s(&f.join("traces")), "--out", s(&model)])
            .status
            .success()
    );

    let lint = guiloc(&[
        "lint-report",
        "--heuristic",
        "--report",
        s(&f.join("reports/R01.json")),
        "--model",
        s(&model),
    ]);
    assert!(lint.status.success());
    let v: serde_json::Value = serde_json::from_slice(&lint.stdout).unwrap();
    assert_eq!(v["classifier"], "heuristic");
    assert!(v["sentences"].as_array().is_some_and(|a| !a.is_empty()));

    let eval = guiloc(&["evaluate", "--index", s(&idx), "--dataset", s(&f), "--query", "expand"]);
    assert!(eval.status.success());
    let v: serde_json::Value = serde_json::from_slice(&eval.stdout).unwrap();
    assert_eq!(v["report_count"], 10);
}

#[test]
fn sweep_resumes_and_fresh_recomputes() {
    let tmp = tempfile::tempdir().unwrap();
    let idx = build_index(tmp.path());
    let f = fixture();
    let csv = tmp.path().join("sweep.csv");
    let sweep = |windows: &str, fresh: bool| {
        let mut args = vec![
            "sweep",
            "--index",
            s(&idx),
            "--dataset",
            s(&f),
            "--out",
            s(&csv),
            "--windows",
            windows,
        ];
        if fresh {
            args.push("--fresh");
        }
        assert!(guiloc(&args).status.success());
        std::fs::read_to_string(&csv).unwrap()
    };
    let small = sweep("1,2", false);
    assert_eq!(small.lines().count(), 3);
    let grown = sweep("1,2,3", false);
    assert_eq!(grown.lines().count(), 4);
    assert!(grown.starts_with(&small));
    assert_eq!(sweep("1,2,3", true), grown);

    let bad = guiloc(&[
        "sweep",
        "--index",
        s(&idx),
        "--dataset",
        s(&f),
        "--out",
        s(&csv),
        "--jobs",
        "0",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}
