//! JSON form of F-matroids.
//!
//! ```json
//! { "tract": "builtin:sign",
//!   "ground": ["1", "2"],
//!   "circuits":   [{"support": ["1", "2"], "values": {"1": "1", "2": "-1"}}],
//!   "cocircuits": [{"values": {"1": "1", "2": "1"}}] }
//! ```
//!
//! `tract` is a reference string (`builtin:<name>`)
//! or an inline tract document. A value is an element name or a one-term
//! list of names. `support`, when present, must match the nonzero values.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};
use tractlab_core::json::{builtin_tract_ref, tract_from_value};
use tractlab_core::{Carrier, Tract};

use crate::matroid::Matroid;
use crate::signature::FMatroid;
use crate::vector::FVector;
use crate::MatroidError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FMatroidDoc {
    tract: Value,
    ground: Vec<String>,
    circuits: Vec<SignedDoc>,
    #[serde(default)]
    cocircuits: Vec<SignedDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SignedDoc {
    #[serde(default)]
    support: Option<Vec<String>>,
    values: BTreeMap<String, Value>,
}

pub fn tract_from_ref(value: Value) -> Result<Tract, MatroidError> {
    match value {
        Value::String(s) => Ok(builtin_tract_ref(&s)?),
        other => Ok(tract_from_value(other)?),
    }
}

fn parse_value(carrier: &Carrier, v: &Value) -> Result<Option<tractlab_core::Unit>, MatroidError> {
    let name = match v {
        Value::String(s) => s.as_str(),
        Value::Array(a) if a.len() == 1 && a[0].is_string() => a[0].as_str().unwrap_or_default(),
        Value::Array(a) if a.is_empty() => return Ok(None),
        _ => return Err(MatroidError::Json(format!("value {v} is not a single element"))),
    };
    carrier
        .element_by_name(name)
        .ok_or_else(|| MatroidError::Json(format!("unknown element `{name}`")))
}

fn parse_signed(carrier: &Carrier, ground: &[String], doc: &SignedDoc) -> Result<FVector, MatroidError> {
    let mut entries = vec![None; ground.len()];
    for (label, v) in &doc.values {
        let i = ground
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| MatroidError::UnknownElement(label.clone()))?;
        entries[i] = parse_value(carrier, v)?;
    }
    let v = FVector::new(entries);
    if let Some(support) = &doc.support {
        let mut want = 0u64;
        for l in support {
            let i = ground
                .iter()
                .position(|g| g == l)
                .ok_or_else(|| MatroidError::UnknownElement(l.clone()))?;
            want |= 1 << i;
        }
        if want != v.support() {
            return Err(MatroidError::Json(format!(
                "support {support:?} does not match the values"
            )));
        }
    }
    Ok(v)
}

/// Parses an F-matroid without checking (DP1)–(DP3); the underlying matroid
/// is generated by the circuit supports.
pub fn fmatroid_from_value(value: Value) -> Result<FMatroid, MatroidError> {
    let doc: FMatroidDoc = serde_json::from_value(value).map_err(|e| MatroidError::Json(e.to_string()))?;
    let tract = tract_from_ref(doc.tract)?;
    let c = tract.carrier().clone();
    let circuits = doc
        .circuits
        .iter()
        .map(|d| parse_signed(&c, &doc.ground, d))
        .collect::<Result<Vec<_>, _>>()?;
    let cocircuits = doc
        .cocircuits
        .iter()
        .map(|d| parse_signed(&c, &doc.ground, d))
        .collect::<Result<Vec<_>, _>>()?;
    let matroid = Matroid::from_masks(doc.ground.clone(), circuits.iter().map(FVector::support).collect())?;
    FMatroid::from_parts(tract, matroid, circuits, cocircuits)
}

pub fn fmatroid_from_str(text: &str) -> Result<FMatroid, MatroidError> {
    fmatroid_from_value(serde_json::from_str(text).map_err(|e| MatroidError::Json(e.to_string()))?)
}

fn signed_json(fm: &FMatroid, v: &FVector) -> Value {
    let c = fm.carrier();
    let mut values = Map::new();
    let mut support = Vec::new();
    for (label, x) in fm.labels().iter().zip(v.entries()) {
        if let Some(u) = x {
            values.insert(label.clone(), Value::String(c.name(*u).to_string()));
            support.push(label.clone());
        }
    }
    json!({"support": support, "values": values})
}

/// Serializes with `tract` set to the given reference or inline value.
pub fn fmatroid_to_value(fm: &FMatroid, tract: Value) -> Value {
    json!({
        "tract": tract,
        "ground": fm.labels(),
        "circuits": fm.circuits().vectors().iter().map(|v| signed_json(fm, v)).collect::<Vec<_>>(),
        "cocircuits": fm.cocircuits().vectors().iter().map(|v| signed_json(fm, v)).collect::<Vec<_>>(),
    })
}
