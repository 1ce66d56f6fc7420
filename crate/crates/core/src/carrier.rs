//! Finite multiplicative carriers: an abelian unit group with an absorbing zero.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::formal_sum::{FormalSum, Unit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("carrier has no units")]
    NoUnits,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("multiplication table has wrong shape")]
    TableShape,
    #[error("zero is not absorbing: {0}")]
    ZeroNotAbsorbing(String),
    #[error("product of units {0} and {1} is zero")]
    ZeroDivisor(String, String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("multiplication is not commutative at ({0}, {1})")]
    NotCommutative(String, String),
    #[error("`{0}` is not a two-sided identity")]
    NotIdentity(String),
    #[error("unit `{0}` has no inverse")]
    NoInverse(String),
    #[error("epsilon `{0}` does not square to one")]
    EpsilonSquare(String),
    #[error("epsilon must be a unit")]
    EpsilonIsZero,
    #[error("more than {0} units are not supported")]
    TooManyUnits(usize),
}

/// The multiplicative structure of a tract: `F = F× ∪ {0}` with `F×` a finite
/// abelian group and a distinguished `ε` with `ε² = 1`.
///
/// Units are addressed by [`Unit`] indices; zero is kept implicit and never
/// appears inside a [`FormalSum`].
#[derive(Clone, PartialEq, Eq)]
pub struct Carrier {
    zero_name: String,
    names: Vec<String>,
    mul: Vec<Vec<Unit>>,
    inv: Vec<Unit>,
    one: Unit,
    epsilon: Unit,
}

pub const MAX_UNITS: usize = 4096;

impl Carrier {
    /// Builds a carrier from a unit multiplication table. Checks the abelian
    /// group axioms and `ε² = 1`.
    pub fn new(
        zero_name: impl Into<String>,
        names: Vec<String>,
        mul: Vec<Vec<Unit>>,
        one: Unit,
        epsilon: Unit,
    ) -> Result<Self, CarrierError> {
        let n = names.len();
        if n == 0 {
            return Err(CarrierError::NoUnits);
        }
        if n > MAX_UNITS {
            return Err(CarrierError::TooManyUnits(MAX_UNITS));
        }
        let zero_name = zero_name.into();
        let mut seen = HashMap::new();
        for name in std::iter::once(&zero_name).chain(&names) {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(CarrierError::DuplicateName(name.clone()));
            }
        }
        if mul.len() != n
            || mul
                .iter()
                .any(|row| row.len() != n || row.iter().any(|u| u.index() >= n))
        {
            return Err(CarrierError::TableShape);
        }
        if one.index() >= n || epsilon.index() >= n {
            return Err(CarrierError::TableShape);
        }
        let nm = |u: usize| names[u].clone();
        for a in 0..n {
            if mul[one.index()][a].index() != a || mul[a][one.index()].index() != a {
                return Err(CarrierError::NotIdentity(nm(one.index())));
            }
            for b in 0..n {
                if mul[a][b] != mul[b][a] {
                    return Err(CarrierError::NotCommutative(nm(a), nm(b)));
                }
                for c in 0..n {
                    let left = mul[mul[a][b].index()][c];
                    let right = mul[a][mul[b][c].index()];
                    if left != right {
                        return Err(CarrierError::NotAssociative(nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for (a, row) in mul.iter().enumerate() {
            match (0..n).find(|&b| row[b] == one) {
                Some(b) => inv.push(Unit(b as u16)),
                None => return Err(CarrierError::NoInverse(nm(a))),
            }
        }
        if mul[epsilon.index()][epsilon.index()] != one {
            return Err(CarrierError::EpsilonSquare(nm(epsilon.index())));
        }
        Ok(Self {
            zero_name,
            names,
            mul,
            inv,
            one,
            epsilon,
        })
    }

    /// Builds a carrier from a full element table including zero, as found in
    /// the JSON tract description. Checks that zero is absorbing and that the
    /// nonzero elements are closed under multiplication.
    pub fn from_element_table(
        elements: &[String],
        zero: &str,
        one: &str,
        epsilon: &str,
        table: &[Vec<String>],
    ) -> Result<Self, CarrierError> {
        let pos = |name: &str| {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| CarrierError::UnknownElement(name.to_string()))
        };
        let z = pos(zero)?;
        if table.len() != elements.len() || table.iter().any(|r| r.len() != elements.len()) {
            return Err(CarrierError::TableShape);
        }
        let unit_of: Vec<Option<Unit>> = {
            let mut k = 0u16;
            (0..elements.len())
                .map(|i| {
                    if i == z {
                        None
                    } else {
                        k += 1;
                        Some(Unit(k - 1))
                    }
                })
                .collect()
        };
        let names: Vec<String> = elements
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != z)
            .map(|(_, e)| e.clone())
            .collect();
        let n = names.len();
        let mut mul = vec![vec![Unit(0); n]; n];
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let k = pos(entry)?;
                match (unit_of[i], unit_of[j]) {
                    (Some(a), Some(b)) => match unit_of[k] {
                        Some(c) => mul[a.index()][b.index()] = c,
                        None => return Err(CarrierError::ZeroDivisor(elements[i].clone(), elements[j].clone())),
                    },
                    _ => {
                        if k != z {
                            return Err(CarrierError::ZeroNotAbsorbing(format!(
                                "{} * {} = {}",
                                elements[i], elements[j], entry
                            )));
                        }
                    }
                }
            }
        }
        let one = unit_of[pos(one)?].ok_or(CarrierError::NotIdentity(one.to_string()))?;
        let epsilon = unit_of[pos(epsilon)?].ok_or(CarrierError::EpsilonIsZero)?;
        Self::new(zero, names, mul, one, epsilon)
    }

    /// Cyclic group of order `n` written multiplicatively as `ζ^k`, with
    /// `ε = ζ^(n/2)` for even `n` and `ε = 1` for `n = 1`.
    pub fn cyclic(names: Vec<String>, zero_name: &str) -> Result<Self, CarrierError> {
        let n = names.len();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| Unit(((a + b) % n) as u16)).collect())
            .collect();
        let eps = if n.is_multiple_of(2) { n / 2 } else { 0 };
        Self::new(zero_name, names, mul, Unit(0), Unit(eps as u16))
    }

    #[inline]
    pub fn n_units(&self) -> usize {
        self.names.len()
    }

    pub fn units(&self) -> impl Iterator<Item = Unit> + Clone {
        (0..self.names.len()).map(|i| Unit(i as u16))
    }

    #[inline]
    pub fn one(&self) -> Unit {
        self.one
    }

    /// The element `ε` (written `-1`).
    #[inline]
    pub fn epsilon(&self) -> Unit {
        self.epsilon
    }

    #[inline]
    pub fn mul(&self, a: Unit, b: Unit) -> Unit {
        self.mul[a.index()][b.index()]
    }

    #[inline]
    pub fn inv(&self, a: Unit) -> Unit {
        self.inv[a.index()]
    }

    #[inline]
    pub fn neg(&self, a: Unit) -> Unit {
        self.mul(self.epsilon, a)
    }

    pub fn name(&self, u: Unit) -> &str {
        &self.names[u.index()]
    }

    pub fn zero_name(&self) -> &str {
        &self.zero_name
    }

    pub fn unit_names(&self) -> &[String] {
        &self.names
    }

    pub fn unit_by_name(&self, name: &str) -> Option<Unit> {
        self.names.iter().position(|n| n == name).map(|i| Unit(i as u16))
    }

    /// Looks up an element by name: `Some(None)` is zero.
    pub fn element_by_name(&self, name: &str) -> Option<Option<Unit>> {
        if name == self.zero_name {
            Some(None)
        } else {
            self.unit_by_name(name).map(Some)
        }
    }

    /// Element name, with `None` standing for zero.
    pub fn element_name(&self, e: Option<Unit>) -> &str {
        match e {
            Some(u) => self.name(u),
            None => &self.zero_name,
        }
    }

    pub fn empty_sum(&self) -> FormalSum {
        FormalSum::empty(self.n_units())
    }

    pub fn singleton(&self, u: Unit) -> FormalSum {
        FormalSum::singleton(self.n_units(), u)
    }

    /// The formal sum of a list of terms; zero terms are dropped.
    pub fn sum_of(&self, terms: &[Option<Unit>]) -> FormalSum {
        let mut s = self.empty_sum();
        for t in terms.iter().flatten() {
            s = s.with_term(*t);
        }
        s
    }

    /// Parses a list of element names into a formal sum. Zero terms are dropped.
    pub fn parse_terms<S: AsRef<str>>(&self, names: &[S]) -> Result<FormalSum, CarrierError> {
        let mut s = self.empty_sum();
        for n in names {
            match self.element_by_name(n.as_ref()) {
                Some(Some(u)) => s = s.with_term(u),
                Some(None) => {}
                None => return Err(CarrierError::UnknownElement(n.as_ref().to_string())),
            }
        }
        Ok(s)
    }

    /// `u · α`, the natural action of a unit on `N[F×]`.
    pub fn scale(&self, u: Unit, sum: &FormalSum) -> FormalSum {
        let mut counts = vec![0u32; self.n_units()];
        for (i, &c) in sum.counts().iter().enumerate() {
            if c > 0 {
                counts[self.mul(u, Unit(i as u16)).index()] += c;
            }
        }
        FormalSum::from_counts(counts)
    }

    /// `-α := ε · α`.
    pub fn negate(&self, sum: &FormalSum) -> FormalSum {
        self.scale(self.epsilon, sum)
    }

    /// Product in the semiring `N[F×]`.
    pub fn mul_sums(&self, a: &FormalSum, b: &FormalSum) -> FormalSum {
        let mut counts = vec![0u32; self.n_units()];
        for (i, &ca) in a.counts().iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.counts().iter().enumerate() {
                if cb > 0 {
                    counts[self.mul(Unit(i as u16), Unit(j as u16)).index()] += ca * cb;
                }
            }
        }
        FormalSum::from_counts(counts)
    }

    /// All sums `u · α`, in unit order.
    pub fn orbit(&self, sum: &FormalSum) -> Vec<FormalSum> {
        self.units().map(|u| self.scale(u, sum)).collect()
    }

    /// The `(norm, lex)`-least member of the unit orbit of `sum`.
    pub fn orbit_rep(&self, sum: &FormalSum) -> FormalSum {
        self.units()
            .map(|u| self.scale(u, sum))
            .min()
            .unwrap_or_else(|| sum.clone())
    }

    /// Wire form: sorted `[element, multiplicity]` pairs.
    pub fn sum_to_json(&self, sum: &FormalSum) -> serde_json::Value {
        serde_json::Value::Array(
            sum.to_pairs()
                .into_iter()
                .map(|(u, c)| serde_json::json!([self.name(u), c]))
                .collect(),
        )
    }

    pub fn sum_from_json(&self, value: &serde_json::Value) -> Result<FormalSum, CarrierError> {
        let bad = || CarrierError::UnknownElement(value.to_string());
        let pairs = value.as_array().ok_or_else(bad)?;
        let mut counts = vec![0u32; self.n_units()];
        for p in pairs {
            let p = p.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let name = p[0].as_str().ok_or_else(bad)?;
            let mult = p[1].as_u64().ok_or_else(bad)?;
            match self.element_by_name(name) {
                Some(Some(u)) => counts[u.index()] += mult as u32,
                Some(None) => {}
                None => return Err(CarrierError::UnknownElement(name.to_string())),
            }
        }
        Ok(FormalSum::from_counts(counts))
    }

    /// Human-readable form, e.g. `1 + 1 + -1`; the empty sum prints as `0`.
    pub fn display_sum(&self, sum: &FormalSum) -> String {
        if sum.is_empty() {
            return self.zero_name.clone();
        }
        sum.terms()
            .into_iter()
            .map(|u| self.name(u).to_string())
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Carrier")
            .field("zero", &self.zero_name)
            .field("units", &self.names)
            .field("one", &self.name(self.one))
            .field("epsilon", &self.name(self.epsilon))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign() -> Carrier {
        Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap()
    }

    fn gf3_units() -> Carrier {
        Carrier::cyclic(vec!["1".into(), "2".into()], "0").unwrap()
    }

    #[test]
    fn epsilon_scaling_fixes_one_plus_epsilon() {
        let c = sign();
        let s = c.parse_terms(&["1", "-1"]).unwrap();
        assert_eq!(c.scale(c.epsilon(), &s), s);
        assert_eq!(c.scale(c.one(), &s), s);
        assert_eq!(c.negate(&s), s);
    }

    #[test]
    fn gf3_scaling_by_two() {
        let c = gf3_units();
        let two = c.unit_by_name("2").unwrap();
        let s = c.parse_terms(&["1", "1"]).unwrap();
        assert_eq!(c.scale(two, &s), c.parse_terms(&["2", "2"]).unwrap());
    }

    #[test]
    fn product_of_sums_multiplies_norms() {
        let c = sign();
        let a = c.parse_terms(&["1", "-1"]).unwrap();
        let b = c.parse_terms(&["1", "1", "-1"]).unwrap();
        let p = c.mul_sums(&a, &b);
        assert_eq!(p.norm(), 6);
        assert_eq!(p, c.parse_terms(&["1", "1", "1", "-1", "-1", "-1"]).unwrap());
    }

    #[test]
    fn element_table_rejects_non_absorbing_zero() {
        let e: Vec<String> = ["0", "1"].iter().map(|s| s.to_string()).collect();
        let t = vec![
            vec!["0".to_string(), "1".to_string()],
            vec!["0".to_string(), "1".to_string()],
        ];
        assert!(matches!(
            Carrier::from_element_table(&e, "0", "1", "1", &t),
            Err(CarrierError::ZeroNotAbsorbing(_))
        ));
    }

    #[test]
    fn rejects_non_group() {
        // {a, b} with a·a = a, a·b = a, b·b = b: no identity that also inverts.
        let r = Carrier::new(
            "0",
            vec!["a".into(), "b".into()],
            vec![vec![Unit(0), Unit(0)], vec![Unit(0), Unit(1)]],
            Unit(1),
            Unit(1),
        );
        assert!(matches!(r, Err(CarrierError::NoInverse(_))));
    }

    #[test]
    fn json_round_trip_and_display() {
        let c = sign();
        let s = c.parse_terms(&["-1", "1", "1"]).unwrap();
        let v = c.sum_to_json(&s);
        assert_eq!(v, serde_json::json!([["1", 2], ["-1", 1]]));
        assert_eq!(c.sum_from_json(&v).unwrap(), s);
        assert_eq!(c.display_sum(&s), "1 + 1 + -1");
        assert_eq!(c.display_sum(&c.empty_sum()), "0");
    }
}
