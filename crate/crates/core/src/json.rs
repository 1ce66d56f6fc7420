//! JSON descriptions of tracts, hyperfields, rings and partial fields.
//!
//! A tract is one of
//! - `{"elements", "zero", "one", "epsilon", "mul", "null"}` with `null` either
//!   `{"kind": "explicit", "sums": [[names]], "bound": k}` or
//!   `{"kind": "builtin", "name": .., "params": {..}}`;
//! - `{"builtin": name, "params": {..}}`;
//! - `{"hyperfield": <hyperfield>}` or `{"partial_field": <partial field>}`.
//!
//! Explicit null sets are taken literally: no orbit closure is applied, so
//! the tract checkers can report a set that is not unit-invariant.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::carrier::{Carrier, CarrierError};
use crate::formal_sum::FormalSum;
use crate::hyperfield::{self, Hyperfield, HyperfieldError};
use crate::partial_field::{FiniteRing, PartialField, RingError};
use crate::phase::{self, PhaseError, PhaseGroup, PhasePointOf};
use crate::tract::{NullOracle, Tract};
use crate::Rational;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error(transparent)]
    Hyperfield(#[from] HyperfieldError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Phase(#[from] PhaseError),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TractDoc {
    Builtin {
        builtin: String,
        #[serde(default)]
        params: Value,
    },
    Hyperfield {
        hyperfield: HyperfieldDoc,
    },
    PartialField {
        partial_field: PartialFieldDoc,
    },
    Table(TableDoc),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    #[serde(default)]
    name: Option<String>,
    elements: Vec<String>,
    zero: String,
    one: String,
    epsilon: String,
    mul: Vec<Vec<String>>,
    null: NullDoc,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum NullDoc {
    Explicit {
        sums: Vec<Vec<String>>,
        bound: u32,
    },
    Builtin {
        name: String,
        #[serde(default)]
        params: Value,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HyperfieldDoc {
    Builtin {
        builtin: String,
        #[serde(default)]
        params: Value,
    },
    Table {
        #[serde(default)]
        name: Option<String>,
        elements: Vec<String>,
        zero: String,
        one: String,
        mul: Vec<Vec<String>>,
        neg: BTreeMap<String, String>,
        sums: Vec<(String, String, Vec<String>)>,
    },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RingDoc {
    Gf {
        p: usize,
    },
    Zmod {
        n: usize,
    },
    Table {
        #[serde(default)]
        name: Option<String>,
        elements: Vec<String>,
        zero: String,
        one: String,
        add: Vec<Vec<String>>,
        mul: Vec<Vec<String>>,
    },
}

#[derive(Deserialize)]
struct PartialFieldDoc {
    ring: RingDoc,
    #[serde(default)]
    generators: Option<Vec<String>>,
}

/// A literal finite null set, valid up to a declared norm.
pub struct ListedOracle {
    sums: HashSet<FormalSum>,
    bound: u32,
}

impl ListedOracle {
    pub fn new(sums: impl IntoIterator<Item = FormalSum>, bound: u32) -> Self {
        Self {
            sums: sums.into_iter().collect(),
            bound,
        }
    }
}

impl NullOracle for ListedOracle {
    fn contains(&self, sum: &FormalSum) -> bool {
        sum.is_empty() || self.sums.contains(sum)
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        Some(self.bound)
    }

    fn describe(&self) -> String {
        format!("{} listed sums", self.sums.len())
    }
}

fn param_u64(params: &Value, key: &str) -> Result<u64, JsonError> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| JsonError::Invalid(format!("missing integer parameter `{key}`")))
}

fn phase_group(params: &Value) -> Result<PhaseGroup, JsonError> {
    let Some(gens) = params.get("generators") else {
        return Ok(phase::quarter_turns());
    };
    let pairs: Vec<(String, String)> = serde_json::from_value(gens.clone())?;
    let points = pairs
        .iter()
        .map(|(x, y)| PhasePointOf::<Rational>::parse(x, y))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PhaseGroup::generated_by(&points)?)
}

/// Built-in tracts: `sign`, `sign_product`, `gf` (`p`), `phase` and
/// `p_prime` (optional `generators` as fraction pairs).
pub fn builtin_tract(name: &str, params: &Value) -> Result<Tract, JsonError> {
    Ok(match name {
        "sign" => hyperfield::tract_of(&hyperfield::sign()),
        "sign_product" => {
            let s = hyperfield::sign();
            hyperfield::tract_of(&hyperfield::product(&s, &s))
        }
        "gf" => {
            let p = param_u64(params, "p")? as usize;
            PartialField::all_units(FiniteRing::gf(p)?)?.tract_embedding()
        }
        "phase" => phase::phase_tract(phase_group(params)?),
        "p_prime" => phase::p_prime(phase_group(params)?),
        other => return Err(JsonError::UnknownBuiltin(other.to_string())),
    })
}

/// Built-in hyperfields: `sign`, `sign_product`, `gf` (`p`), `broken`.
pub fn builtin_hyperfield(name: &str, params: &Value) -> Result<Hyperfield, JsonError> {
    Ok(match name {
        "sign" => hyperfield::sign(),
        "sign_product" => {
            let s = hyperfield::sign();
            hyperfield::product(&s, &s)
        }
        "gf" => {
            let p = param_u64(params, "p")? as usize;
            FiniteRing::gf(p)?;
            hyperfield::prime_field(p)
        }
        "broken" => hyperfield::broken_reversibility(),
        other => return Err(JsonError::UnknownBuiltin(other.to_string())),
    })
}

fn table_tract(doc: TableDoc) -> Result<Tract, JsonError> {
    let name = doc.name.unwrap_or_else(|| "tract".to_string());
    match doc.null {
        NullDoc::Builtin { name: builtin, params } => {
            let t = builtin_tract(&builtin, &params)?;
            let mut given: Vec<&String> = doc.elements.iter().filter(|e| **e != doc.zero).collect();
            let mut known: Vec<&String> = t.carrier().unit_names().iter().collect();
            given.sort();
            known.sort();
            if given != known {
                return Err(JsonError::Invalid(format!(
                    "elements do not match the units of builtin `{builtin}`"
                )));
            }
            Ok(t)
        }
        NullDoc::Explicit { sums, bound } => {
            let carrier = Carrier::from_element_table(&doc.elements, &doc.zero, &doc.one, &doc.epsilon, &doc.mul)?;
            let parsed = sums
                .iter()
                .map(|s| carrier.parse_terms(s))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(s) = parsed.iter().find(|s| s.norm() > bound) {
                return Err(JsonError::Invalid(format!(
                    "listed sum {} exceeds the declared bound {bound}",
                    carrier.display_sum(s)
                )));
            }
            Ok(Tract::new(
                name,
                Arc::new(carrier),
                Arc::new(ListedOracle::new(parsed, bound)),
            ))
        }
    }
}

fn hyperfield_from_doc(doc: HyperfieldDoc) -> Result<Hyperfield, JsonError> {
    match doc {
        HyperfieldDoc::Builtin { builtin, params } => builtin_hyperfield(&builtin, &params),
        HyperfieldDoc::Table {
            name,
            elements,
            zero,
            one,
            mul,
            neg,
            sums,
        } => {
            let neg_list = elements
                .iter()
                .map(|e| {
                    neg.get(e)
                        .cloned()
                        .ok_or_else(|| JsonError::Invalid(format!("no negative given for `{e}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut table: BTreeMap<(String, String), Vec<String>> = BTreeMap::new();
            for (a, b, c) in sums {
                table.insert((a, b), c);
            }
            let mut sum = Vec::with_capacity(elements.len());
            for a in &elements {
                let mut row = Vec::with_capacity(elements.len());
                for b in &elements {
                    let cell = table
                        .get(&(a.clone(), b.clone()))
                        .or_else(|| table.get(&(b.clone(), a.clone())))
                        .cloned()
                        .or_else(|| {
                            if *a == zero {
                                Some(vec![b.clone()])
                            } else if *b == zero {
                                Some(vec![a.clone()])
                            } else {
                                None
                            }
                        })
                        .ok_or_else(|| JsonError::Invalid(format!("no hypersum given for ({a}, {b})")))?;
                    row.push(cell);
                }
                sum.push(row);
            }
            let name = name.unwrap_or_else(|| "hyperfield".to_string());
            Ok(Hyperfield::from_named_tables(
                name, elements, &zero, &one, &mul, &neg_list, &sum,
            )?)
        }
    }
}

fn ring_from_doc(doc: RingDoc) -> Result<FiniteRing, JsonError> {
    Ok(match doc {
        RingDoc::Gf { p } => FiniteRing::gf(p)?,
        RingDoc::Zmod { n } => FiniteRing::zmod(n)?,
        RingDoc::Table {
            name,
            elements,
            zero,
            one,
            add,
            mul,
        } => FiniteRing::from_named_tables(name.unwrap_or_else(|| "ring".into()), elements, &add, &mul, &zero, &one)?,
    })
}

fn partial_field_from_doc(doc: PartialFieldDoc) -> Result<PartialField, JsonError> {
    let ring = ring_from_doc(doc.ring)?;
    match doc.generators {
        None => Ok(PartialField::all_units(ring)?),
        Some(names) => {
            let gens = names
                .iter()
                .map(|n| ring.element(n).ok_or_else(|| RingError::UnknownElement(n.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PartialField::new(ring, &gens)?)
        }
    }
}

/// Splits `builtin:<name>` (prefix optional) into a builtin name and its
/// parameters; `gf<p>` is shorthand for `gf` with `{"p": p}`.
pub fn parse_builtin_ref(reference: &str) -> (String, Value) {
    let name = reference.strip_prefix("builtin:").unwrap_or(reference);
    if let Some(p) = name.strip_prefix("gf").and_then(|d| d.parse::<u64>().ok()) {
        return ("gf".to_string(), serde_json::json!({ "p": p }));
    }
    (name.to_string(), Value::Null)
}

pub fn builtin_tract_ref(reference: &str) -> Result<Tract, JsonError> {
    let (name, params) = parse_builtin_ref(reference);
    builtin_tract(&name, &params)
}

pub fn builtin_hyperfield_ref(reference: &str) -> Result<Hyperfield, JsonError> {
    let (name, params) = parse_builtin_ref(reference);
    builtin_hyperfield(&name, &params)
}

pub fn tract_from_value(value: Value) -> Result<Tract, JsonError> {
    match serde_json::from_value::<TractDoc>(value)? {
        TractDoc::Builtin { builtin, params } => builtin_tract(&builtin, &params),
        TractDoc::Hyperfield { hyperfield } => Ok(hyperfield::tract_of(&hyperfield_from_doc(hyperfield)?)),
        TractDoc::PartialField { partial_field } => Ok(partial_field_from_doc(partial_field)?.tract_embedding()),
        TractDoc::Table(doc) => table_tract(doc),
    }
}

pub fn tract_from_str(text: &str) -> Result<Tract, JsonError> {
    tract_from_value(serde_json::from_str(text)?)
}

pub fn hyperfield_from_value(value: Value) -> Result<Hyperfield, JsonError> {
    hyperfield_from_doc(serde_json::from_value(value)?)
}

pub fn hyperfield_from_str(text: &str) -> Result<Hyperfield, JsonError> {
    hyperfield_from_value(serde_json::from_str(text)?)
}

/// `{"ring": <ring>, "generators": [names]}`; without generators the group
/// is all of `R×`.
pub fn partial_field_from_value(value: Value) -> Result<PartialField, JsonError> {
    partial_field_from_doc(serde_json::from_value(value)?)
}

pub fn read_json(path: &Path) -> Result<Value, JsonError> {
    let text = std::fs::read_to_string(path).map_err(|source| JsonError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn builtin_forms() {
        let t = tract_from_value(json!({"builtin": "gf", "params": {"p": 3}})).unwrap();
        assert_eq!(t.carrier().n_units(), 2);
        let t = tract_from_value(json!({
            "elements": ["0", "1", "-1"], "zero": "0", "one": "1", "epsilon": "-1",
            "mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]],
            "null": {"kind": "builtin", "name": "sign"}
        }))
        .unwrap();
        let c = t.carrier().clone();
        assert!(t.is_null(&c.parse_terms(&["1", "1", "-1"]).unwrap()).unwrap());
        assert!(matches!(
            tract_from_value(json!({"builtin": "krasner"})),
            Err(JsonError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn explicit_null_set_is_literal() {
        let t = tract_from_value(json!({
            "elements": ["0", "1", "-1"], "zero": "0", "one": "1", "epsilon": "-1",
            "mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]],
            "null": {"kind": "explicit", "sums": [["1", "-1"]], "bound": 3}
        }))
        .unwrap();
        let c = t.carrier().clone();
        assert!(t.is_null(&c.parse_terms(&["-1", "1"]).unwrap()).unwrap());
        assert!(t.is_null(&c.empty_sum()).unwrap());
        assert!(!t.is_null(&c.parse_terms(&["1", "1", "-1"]).unwrap()).unwrap());
        assert!(t.is_null(&c.parse_terms(&["1", "1", "-1", "-1"]).unwrap()).is_err());
    }

    #[test]
    fn hyperfield_table() {
        let h = hyperfield_from_value(json!({
            "elements": ["0", "1", "-1"], "zero": "0", "one": "1",
            "mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]],
            "neg": {"0": "0", "1": "-1", "-1": "1"},
            "sums": [["1","1",["1"]], ["-1","-1",["-1"]], ["1","-1",["0","1","-1"]]]
        }))
        .unwrap();
        let s = hyperfield::sign();
        for a in s.names() {
            for b in s.names() {
                let (x, y) = (h.element(a).unwrap(), h.element(b).unwrap());
                let mut got = h.set_names(h.hypersum2(x, y));
                let (u, v) = (s.element(a).unwrap(), s.element(b).unwrap());
                let mut want = s.set_names(s.hypersum2(u, v));
                got.sort();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn partial_field_forms() {
        let p = partial_field_from_value(json!({"ring": {"kind": "gf", "p": 3}, "generators": ["1"]})).unwrap();
        assert_eq!(p.group(), &[1, 2]);
        let t = tract_from_value(json!({"partial_field": {"ring": {"kind": "zmod", "n": 6}}})).unwrap();
        assert_eq!(t.carrier().n_units(), 2);
    }

    #[test]
    fn phase_params() {
        let t = tract_from_value(json!({"builtin": "p_prime", "params": {"generators": [["0", "1"]]}})).unwrap();
        assert_eq!(t.carrier().n_units(), 4);
        assert!(tract_from_value(json!({"builtin": "phase", "params": {"generators": [["3/5", "4/5"]]}})).is_err());
    }
}
