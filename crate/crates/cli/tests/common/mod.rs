#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Output;

use assert_cmd::Command;
use jsonschema::JSONSchema;
use serde_json::Value;

pub fn sfword() -> Command {
    let mut cmd = Command::cargo_bin("sfword").unwrap();
    cmd.env_remove("SFWORD_THREADS");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    sfword().args(args).output().unwrap()
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

pub fn manifest_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

/// Validates `instance` against `schemas/<name>.schema.json`.
pub fn assert_schema(name: &str, instance: &Value) {
    let path = manifest_path(&format!("schemas/{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let compiled =
        JSONSchema::compile(&schema).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let msgs: Vec<String> = match compiled.validate(instance) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("{name}: {}", msgs.join("; "));
}

/// Compares `actual` with `tests/golden/<name>`; rewrites the file when
/// `UPDATE_GOLDEN` is set.
pub fn assert_golden(name: &str, actual: &str) {
    let path = manifest_path(&format!("tests/golden/{name}"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert!(expected == actual, "{name} differs from golden file");
}
