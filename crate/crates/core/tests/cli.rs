use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use qsinf::classify::ClassifyError;
use qsinf::report::{batch_exit_code, error_kind, EXIT_GAP, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, EXIT_PARSE};
use serde_json::Value;

const E1: &str = r#"{"p":{"x2":1},"q":{"y2":1}}"#;

fn run(stdin: &str, args: &[&str]) -> (i32, Output) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qsinf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().expect("exit code"), out)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qsinf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn worked_example_report() {
    let (code, out) = run(E1, &[]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["valid"], true);
    let c = &v["classification"];
    assert_eq!(c["sigma"], 1);
    assert_eq!(c["figure"], 5);
    assert_eq!(c["fused_divisor"], "(1,0,1)p+(1,0,1)q+(1,0,-1)r");
    assert_eq!(c["n_r"], 3);
    assert_eq!(c["n_hsect"], 4);
    assert_eq!(c["o"], serde_json::json!([2, 1, 1, 2, 1, 1]));
    assert_eq!(v["comitants"]["eta"]["text"], "1");
    assert_eq!(v["divisors"]["delta_s"], 0);
    assert_eq!(v["oracle"]["agreement"]["tensor"], true);
}

#[test]
fn all_oracles_agree_on_worked_example() {
    let (code, out) = run(E1, &["--oracle", "all", "--pretty"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["oracle"]["mode"], "all");
    assert_eq!(v["oracle"]["agreement"]["numeric"], true);
    assert_eq!(v["oracle"]["numeric"]["multiset"], serde_json::json!([-1, 1, 1]));
    assert_eq!(v["oracle"]["numeric"]["unresolved"], 0);
}

#[test]
fn svg_output_is_deterministic() {
    let a = scratch("a.svg");
    let b = scratch("b.svg");
    assert_eq!(run(E1, &["--svg", a.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(run(E1, &["--svg", b.to_str().unwrap()]).0, EXIT_OK);
    let a = std::fs::read(a).unwrap();
    assert!(a.starts_with(b"<svg"));
    assert_eq!(a, std::fs::read(b).unwrap());
}

#[test]
fn input_file_and_batch() {
    let path = scratch("batch.json");
    let svg = scratch("batch.svg");
    std::fs::write(&path, format!("[{E1}, {{\"p\":{{\"x2\":1}},\"q\":{{\"x2\":1}}}}]")).unwrap();
    let (code, out) = run("", &["--input", path.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    let v = json(&out);
    assert_eq!(v[0]["valid"], true);
    assert_eq!(v[1]["valid"], false);
    assert!(scratch("batch-0.svg").exists());
    assert!(!scratch("batch-1.svg").exists());
}

#[test]
fn malformed_input_exits_four() {
    for bad in ["{", "[1, 2", r#"{"p": 3}"#, "not json"] {
        let (code, out) = run(bad, &[]);
        assert_eq!(code, EXIT_PARSE, "{bad}");
        assert!(json(&out)["error"].is_object(), "{bad}");
    }
    let (code, _) = run("", &["--input", "/nonexistent/qsinf.json"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn invalid_system_exits_two() {
    // x' = x^2, y' = xy has C2 = 0.
    let (code, out) = run(r#"{"p":{"x2":1},"q":{"xy":1}}"#, &[]);
    assert_eq!(code, EXIT_INVALID);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert!(v["error"]["kind"].is_string());
    assert!(v["classification"].is_null());
}

#[test]
fn error_kinds_map_to_exit_codes() {
    let gap = ClassifyError::ClassificationGap { table: "figure", matches: vec![] };
    assert_eq!(error_kind(&gap).1, EXIT_GAP);
    let internal = ClassifyError::InternalInconsistency("x".into());
    assert_eq!(error_kind(&internal).1, EXIT_INTERNAL);
    assert_eq!(batch_exit_code([0, 3, 2]), 3);
    assert_eq!(batch_exit_code([]), 0);
}

#[test]
fn one_system_with_numeric_oracle_is_fast() {
    let systems = [
        E1,
        r#"{"p":{"1":3,"xy":-1},"q":{"xy":-3}}"#,
        r#"{"p":{"x2":1,"1":-1},"q":{"x2":-1,"xy":1}}"#,
        r#"{"p":{"y":1},"q":{"x2":-1}}"#,
    ];
    for s in systems {
        let t = Instant::now();
        let (code, _) = run(s, &["--oracle", "all"]);
        assert_eq!(code, EXIT_OK, "{s}");
        assert!(t.elapsed() < Duration::from_secs(1), "{s} took {:?}", t.elapsed());
    }
}
