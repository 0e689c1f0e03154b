//! The JSON report printed by every subcommand.
//!
//! Top-level keys: `command`, `params`, `pass`, `metrics`, `witnesses`,
//! `records`. Object keys are sorted. Finite reals are written with 17
//! significant digits in exponent form; non-finite reals become the strings
//! `"Infinity"`, `"-Infinity"` and `"NaN"`.

use std::str::FromStr;

use serde_json::{Map, Number, Value};

/// A JSON real with 17 significant digits.
pub fn real(x: f64) -> Value {
    if x.is_nan() {
        Value::String("NaN".into())
    } else if x.is_infinite() {
        Value::String(if x > 0.0 { "Infinity" } else { "-Infinity" }.into())
    } else {
        Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float"))
    }
}

/// A JSON integer of any size.
pub fn int(x: impl ToString) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub metrics: Map<String, Value>,
    pub witnesses: Vec<Value>,
    pub records: Vec<Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            params: Map::new(),
            pass: true,
            metrics: Map::new(),
            witnesses: Vec::new(),
            records: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, v: Value) -> &mut Self {
        self.params.insert(key.into(), v);
        self
    }

    pub fn metric(&mut self, key: &str, v: Value) -> &mut Self {
        self.metrics.insert(key.into(), v);
        self
    }

    /// Records a sub-check; the report passes only if all of them do.
    pub fn check(&mut self, key: &str, ok: bool) -> &mut Self {
        self.pass &= ok;
        self.metric(key, Value::Bool(ok))
    }

    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert("params".into(), Value::Object(self.params.clone()));
        top.insert("pass".into(), Value::Bool(self.pass));
        top.insert("metrics".into(), Value::Object(self.metrics.clone()));
        top.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        top.insert("records".into(), Value::Array(self.records.clone()));
        serde_json::to_string_pretty(&Value::Object(top)).expect("report serializes")
    }
}
