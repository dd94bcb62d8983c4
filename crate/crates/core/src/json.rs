//! JSON interchange: `{"dim": n, "basis": [...], "brackets": {"i,j": [[k, "p/q"], ...]}}`.
//!
//! Indices are 1-based. Object keys come out sorted and coefficient lists in k order,
//! so emitting a parsed table reproduces the original bytes.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::AlgebraError;
use crate::scalar::{format_scalar, parse_scalar};
use crate::tensor::StructureTensor;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Wire {
    dim: usize,
    basis: Vec<String>,
    brackets: Map<String, Value>,
}

pub fn tensor_to_value(t: &StructureTensor) -> Value {
    let mut brackets = Map::new();
    for (&(i, j), coeffs) in t.entries() {
        let list: Vec<Value> = coeffs
            .iter()
            .map(|(k, c)| Value::Array(vec![Value::from(k + 1), Value::from(format_scalar(c))]))
            .collect();
        brackets.insert(format!("{},{}", i + 1, j + 1), Value::Array(list));
    }
    serde_json::to_value(Wire { dim: t.dim(), basis: t.labels().to_vec(), brackets }).expect("serializable")
}

pub fn tensor_from_value(v: &Value) -> Result<StructureTensor, AlgebraError> {
    let w: Wire = serde_json::from_value(v.clone()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    if w.basis.len() != w.dim {
        return Err(AlgebraError::DimensionMismatch { expected: w.dim, got: w.basis.len() });
    }
    let mut t = StructureTensor::new(w.basis);
    let idx = |x: usize| -> Result<usize, AlgebraError> {
        if x == 0 || x > w.dim {
            Err(AlgebraError::IndexOutOfRange { index: x, dim: w.dim })
        } else {
            Ok(x - 1)
        }
    };
    for (key, list) in &w.brackets {
        let (a, b) = key.split_once(',').ok_or_else(|| AlgebraError::Parse(format!("bad key {key:?}")))?;
        let i = idx(a.trim().parse().map_err(|_| AlgebraError::Parse(format!("bad key {key:?}")))?)?;
        let j = idx(b.trim().parse().map_err(|_| AlgebraError::Parse(format!("bad key {key:?}")))?)?;
        let items = list.as_array().ok_or_else(|| AlgebraError::Parse(format!("entry {key} is not a list")))?;
        for item in items {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| AlgebraError::Parse(format!("bad term in {key}")))?;
            let k = pair[0].as_u64().ok_or_else(|| AlgebraError::Parse(format!("bad index in {key}")))? as usize;
            let c = pair[1].as_str().ok_or_else(|| AlgebraError::Parse(format!("coefficient in {key} must be a string")))?;
            t.add(i, j, idx(k)?, parse_scalar(c)?);
        }
    }
    Ok(t)
}

pub fn tensor_to_json(t: &StructureTensor, pretty: bool) -> String {
    let v = tensor_to_value(t);
    if pretty {
        serde_json::to_string_pretty(&v).expect("serializable")
    } else {
        serde_json::to_string(&v).expect("serializable")
    }
}

pub fn tensor_from_json(s: &str) -> Result<StructureTensor, AlgebraError> {
    let v: Value = serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    tensor_from_value(&v)
}
