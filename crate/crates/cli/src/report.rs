//! The JSON report every subcommand prints.

use leibniz_core::scalar::format_scalar;
use leibniz_core::{Residual, SparseVec};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub results: Value,
    pub artifacts: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport { command: command.into(), inputs, checks: Vec::new(), results: json!({}), artifacts: Vec::new() }
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: Value) {
        self.checks.push(Check { name: name.into(), pass, detail });
    }

    pub fn result(&mut self, key: &str, v: Value) {
        self.results.as_object_mut().expect("results is an object").insert(key.into(), v);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("serializable")
        } else {
            serde_json::to_string(self).expect("serializable")
        }
    }
}

/// `[[k, "c"], ...]` with 1-based indices, the same shape as the tensor format.
pub fn sparse_json(v: &SparseVec) -> Value {
    Value::Array(v.iter().map(|(k, c)| json!([k + 1, format_scalar(c)])).collect())
}

pub fn residual_json(r: &Residual) -> Value {
    let (i, j, k) = r.triple;
    json!({ "triple": [i + 1, j + 1, k + 1], "residual": sparse_json(&r.value.to_sparse()) })
}
