#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::Value;

pub fn ngwp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngwp")).args(args).output().expect("spawn ngwp")
}

pub fn ngwp_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngwp")).args(args).env(key, value).output().expect("spawn ngwp")
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

/// Data rows of a CSV output, header dropped, each split into numbers.
pub fn csv_rows(o: &Output) -> Vec<Vec<f64>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().expect("numeric cell")).collect())
        .collect()
}

pub fn schema() -> Value {
    serde_json::from_str(include_str!("../../schema/report.schema.json")).expect("schema parses")
}

/// Schema violations of a report document, empty when valid.
pub fn schema_errors(doc: &Value) -> Vec<String> {
    let s = schema();
    let v = jsonschema::validator_for(&s).expect("schema compiles");
    v.iter_errors(doc).map(|e| e.to_string()).collect()
}

/// The document with the fields that legitimately differ between runs removed.
pub fn stable_body(doc: &Value) -> Value {
    let mut d = doc.clone();
    d.as_object_mut().unwrap().remove("timestamp");
    for r in d["reports"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("runtime_ms");
    }
    d
}
