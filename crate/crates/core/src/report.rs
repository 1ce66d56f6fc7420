//! Check reports with re-verifiable witnesses.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::carrier::Carrier;
use crate::formal_sum::{FormalSum, Unit};

/// The statement a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    T1,
    T2,
    T3,
    I,
    F,
    SF,
    MSF,
    #[serde(rename = "MSF'")]
    MsfPrime,
    #[serde(rename = "sum'")]
    SumPrime,
    #[serde(rename = "FFPT-decomposition")]
    FfptDecomposition,
    Morphism,
    Involution,
    HG1,
    HG2,
    HG3,
    HG4,
    HG5,
    HG6,
    HR1,
    HR2,
    HR3,
    HR4,
    Stringent,
    #[serde(rename = "HAP")]
    Hap,
    #[serde(rename = "stringency-equivalence")]
    StringencyEquivalence,
    #[serde(rename = "closure-vs-embedding")]
    ClosureComparison,
    #[serde(rename = "sigma-fixed-point")]
    SigmaFixedPoint,
    C0,
    C1,
    C2,
    DP1,
    DP2,
    DP3,
    #[serde(rename = "wedge-closure")]
    WedgeClosure,
    #[serde(rename = "minor-props")]
    MinorProps,
    #[serde(rename = "supp-lemma")]
    SuppLemma,
    #[serde(rename = "lower-term")]
    LowerTerm,
    #[serde(rename = "strong-perfection")]
    StrongPerfection,
    #[serde(rename = "perfection")]
    Perfection,
    #[serde(rename = "expand-inner-product")]
    ExpandInnerProduct,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match serde_json::to_value(self) {
            Ok(Value::String(s)) => f.write_str(&s),
            _ => write!(f, "{self:?}"),
        }
    }
}

/// One named component of a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessPart {
    Sum(FormalSum),
    /// A carrier element; `None` is zero.
    Element(Option<Unit>),
    /// A coordinate vector of formal sums, e.g. a generalized vector.
    Vector(Vec<FormalSum>),
    Text(String),
    Number(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub parts: Vec<(String, WitnessPart)>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sum(mut self, name: &str, s: FormalSum) -> Self {
        self.parts.push((name.to_string(), WitnessPart::Sum(s)));
        self
    }

    pub fn element(mut self, name: &str, e: Option<Unit>) -> Self {
        self.parts.push((name.to_string(), WitnessPart::Element(e)));
        self
    }

    pub fn vector(mut self, name: &str, v: Vec<FormalSum>) -> Self {
        self.parts.push((name.to_string(), WitnessPart::Vector(v)));
        self
    }

    pub fn text(mut self, name: &str, t: impl Into<String>) -> Self {
        self.parts.push((name.to_string(), WitnessPart::Text(t.into())));
        self
    }

    pub fn number(mut self, name: &str, n: u64) -> Self {
        self.parts.push((name.to_string(), WitnessPart::Number(n)));
        self
    }

    pub fn get(&self, name: &str) -> Option<&WitnessPart> {
        self.parts.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn get_sum(&self, name: &str) -> Option<&FormalSum> {
        match self.get(name) {
            Some(WitnessPart::Sum(s)) => Some(s),
            _ => None,
        }
    }

    pub fn get_element(&self, name: &str) -> Option<Option<Unit>> {
        match self.get(name) {
            Some(WitnessPart::Element(e)) => Some(*e),
            _ => None,
        }
    }

    pub fn get_vector(&self, name: &str) -> Option<&[FormalSum]> {
        match self.get(name) {
            Some(WitnessPart::Vector(v)) => Some(v),
            _ => None,
        }
    }

    pub fn to_json(&self, carrier: &Carrier) -> Value {
        let mut m = Map::new();
        for (name, part) in &self.parts {
            m.insert(name.clone(), part_json(part, carrier));
        }
        Value::Object(m)
    }

    pub fn to_text(&self, carrier: &Carrier) -> String {
        self.parts
            .iter()
            .map(|(name, part)| {
                let v = match part {
                    WitnessPart::Sum(s) => carrier.display_sum(s),
                    WitnessPart::Element(e) => carrier.element_name(*e).to_string(),
                    WitnessPart::Vector(v) => format!(
                        "({})",
                        v.iter().map(|s| carrier.display_sum(s)).collect::<Vec<_>>().join(", ")
                    ),
                    WitnessPart::Text(t) => t.clone(),
                    WitnessPart::Number(n) => n.to_string(),
                };
                format!("{name} = {v}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn part_json(part: &WitnessPart, carrier: &Carrier) -> Value {
    match part {
        WitnessPart::Sum(s) => carrier.sum_to_json(s),
        WitnessPart::Element(e) => Value::String(carrier.element_name(*e).to_string()),
        WitnessPart::Vector(v) => Value::Array(v.iter().map(|s| carrier.sum_to_json(s)).collect()),
        WitnessPart::Text(t) => Value::String(t.clone()),
        WitnessPart::Number(n) => json!(n),
    }
}

/// Outcome of a bounded exhaustive check.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub bound_checked: u32,
    /// Free-form counters and notes, emitted verbatim in JSON.
    pub details: Map<String, Value>,
}

impl AxiomReport {
    pub fn pass(axiom: Axiom, bound: u32) -> Self {
        Self {
            axiom,
            holds: true,
            witness: None,
            bound_checked: bound,
            details: Map::new(),
        }
    }

    pub fn fail(axiom: Axiom, bound: u32, witness: Witness) -> Self {
        Self {
            axiom,
            holds: false,
            witness: Some(witness),
            bound_checked: bound,
            details: Map::new(),
        }
    }

    pub fn from_witness(axiom: Axiom, bound: u32, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fail(axiom, bound, w),
            None => Self::pass(axiom, bound),
        }
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self, carrier: &Carrier) -> Value {
        json!({
            "axiom": self.axiom,
            "holds": self.holds,
            "witness": self.witness.as_ref().map(|w| w.to_json(carrier)),
            "bound_checked": self.bound_checked,
            "details": Value::Object(self.details.clone()),
        })
    }

    pub fn to_text(&self, carrier: &Carrier) -> String {
        let verdict = if self.holds { "holds" } else { "FAILS" };
        let mut line = format!("{} {} (bound {})", self.axiom, verdict, self.bound_checked);
        if let Some(w) = &self.witness {
            line.push_str(&format!(": {}", w.to_text(carrier)));
        }
        line
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_tags_render_as_strings() {
        assert_eq!(Axiom::SF.to_string(), "SF");
        assert_eq!(Axiom::MsfPrime.to_string(), "MSF'");
        assert_eq!(Axiom::StrongPerfection.to_string(), "strong-perfection");
    }

    #[test]
    fn report_json_shape() {
        let c = Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap();
        let w = Witness::new()
            .sum("alpha", c.parse_terms(&["1"]).unwrap())
            .element("z", None);
        let r = AxiomReport::fail(Axiom::F, 4, w).detail("checked", 10);
        let v = r.to_json(&c);
        assert_eq!(v["axiom"], "F");
        assert_eq!(v["holds"], false);
        assert_eq!(v["witness"]["alpha"], json!([["1", 1]]));
        assert_eq!(v["witness"]["z"], "0");
        assert_eq!(v["details"]["checked"], 10);
        assert_eq!(r.to_text(&c), "F FAILS (bound 4): alpha = 1, z = 0");
    }
}
