//! Partial fields: a finite commutative ring with a unit subgroup containing
//! `-1`. The tract embedding calls a sum null when its terms add to zero in
//! the ring.

use std::sync::Arc;

use thiserror::Error;

use crate::axioms::CheckError;
use crate::carrier::{Carrier, CarrierError};
use crate::closure::{compare_null_sets, fusion_closure_tract};
use crate::formal_sum::{FormalSum, Unit};
use crate::pasture::Pasture;
use crate::report::{Axiom, AxiomReport};
use crate::space::SumSpace;
use crate::tract::{NullOracle, Tract};

pub const MAX_RING_ELEMENTS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring tables have the wrong shape")]
    Shape,
    #[error("rings are limited to {MAX_RING_ELEMENTS} elements")]
    TooLarge,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("ring axiom `{law}` fails at ({a}, {b}, {c})")]
    Axiom {
        law: &'static str,
        a: String,
        b: String,
        c: String,
    },
    #[error("GF({0}) is not supported; use a prime at most 7")]
    UnsupportedField(usize),
    #[error("generator `{0}` is not a unit")]
    NotUnit(String),
    #[error("pasture nullity is defined for norm at most 3, got {0}")]
    NormTooLarge(u32),
    #[error(transparent)]
    Carrier(#[from] CarrierError),
}

/// A finite commutative ring with 1, given by tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    /// Checks the commutative ring axioms exhaustively.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        let n = names.len();
        if n == 0 || zero >= n || one >= n {
            return Err(RingError::Shape);
        }
        if n > MAX_RING_ELEMENTS {
            return Err(RingError::TooLarge);
        }
        for t in [&add, &mul] {
            if t.len() != n || t.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
                return Err(RingError::Shape);
            }
        }
        let fail = |law, a: usize, b: usize, c: usize| RingError::Axiom {
            law,
            a: names[a].clone(),
            b: names[b].clone(),
            c: names[c].clone(),
        };
        for a in 0..n {
            if add[zero][a] != a {
                return Err(fail("additive identity", zero, a, a));
            }
            if mul[one][a] != a {
                return Err(fail("multiplicative identity", one, a, a));
            }
            if !(0..n).any(|b| add[a][b] == zero) {
                return Err(fail("additive inverse", a, a, a));
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Err(fail("additive commutativity", a, b, b));
                }
                if mul[a][b] != mul[b][a] {
                    return Err(fail("multiplicative commutativity", a, b, b));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(fail("additive associativity", a, b, c));
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(fail("multiplicative associativity", a, b, c));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(fail("distributivity", a, b, c));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            names,
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn from_named_tables(
        name: impl Into<String>,
        names: Vec<String>,
        add: &[Vec<String>],
        mul: &[Vec<String>],
        zero: &str,
        one: &str,
    ) -> Result<Self, RingError> {
        let idx = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| RingError::UnknownElement(s.to_string()))
        };
        let table = |t: &[Vec<String>]| {
            t.iter()
                .map(|r| r.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
        };
        let (add, mul) = (table(add)?, table(mul)?);
        let (z, o) = (idx(zero)?, idx(one)?);
        Self::new(name, names, add, mul, z, o)
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn zmod(n: usize) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::Shape);
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| a * b % n).collect()).collect();
        Self::new(format!("Z/{n}"), names, add, mul, 0, 1)
    }

    /// The prime field `GF(p)` for `p ∈ {2, 3, 5, 7}`.
    pub fn gf(p: usize) -> Result<Self, RingError> {
        if ![2, 3, 5, 7].contains(&p) {
            return Err(RingError::UnsupportedField(p));
        }
        let mut r = Self::zmod(p)?;
        r.name = format!("GF({p})");
        Ok(r)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.len())
            .find(|&b| self.add[a][b] == self.zero)
            .expect("checked on construction")
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.len()).any(|b| self.mul[a][b] == self.one)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_unit(a)).collect()
    }
}

/// `P_{G,R}`: a ring `R` together with a subgroup `G ≤ R×` containing `-1`.
#[derive(Debug, Clone)]
pub struct PartialField {
    ring: FiniteRing,
    group: Vec<usize>,
    carrier: Arc<Carrier>,
}

impl PartialField {
    /// The group is generated by `generators` together with `-1`.
    pub fn new(ring: FiniteRing, generators: &[usize]) -> Result<Self, RingError> {
        for &g in generators {
            if g >= ring.len() {
                return Err(RingError::Shape);
            }
            if !ring.is_unit(g) {
                return Err(RingError::NotUnit(ring.names[g].clone()));
            }
        }
        let minus_one = ring.neg(ring.one);
        let mut in_group = vec![false; ring.len()];
        in_group[ring.one] = true;
        let mut frontier = vec![ring.one];
        let gens: Vec<usize> = generators.iter().copied().chain([minus_one]).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = ring.mul(x, g);
                if !in_group[y] {
                    in_group[y] = true;
                    frontier.push(y);
                }
            }
        }
        let group: Vec<usize> = (0..ring.len()).filter(|&a| in_group[a]).collect();
        let pos = |a: usize| Unit(group.iter().position(|&g| g == a).expect("closed") as u16);
        let mul = group
            .iter()
            .map(|&a| group.iter().map(|&b| pos(ring.mul(a, b))).collect())
            .collect();
        let names = group.iter().map(|&a| ring.names[a].clone()).collect();
        let carrier = Carrier::new(ring.names[ring.zero].clone(), names, mul, pos(ring.one), pos(minus_one))?;
        Ok(Self {
            ring,
            group,
            carrier: Arc::new(carrier),
        })
    }

    /// The partial field whose group is all of `R×`.
    pub fn all_units(ring: FiniteRing) -> Result<Self, RingError> {
        let units = ring.units();
        Self::new(ring, &units)
    }

    pub fn name(&self) -> String {
        if self.group.len() + 1 == self.ring.len() {
            self.ring.name.clone()
        } else {
            let names: Vec<&str> = self.group.iter().map(|&g| self.ring.names[g].as_str()).collect();
            format!("{}[{}]", self.ring.name, names.join(","))
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Group elements as ring indices, in carrier order.
    pub fn group(&self) -> &[usize] {
        &self.group
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn ring_element(&self, u: Unit) -> usize {
        self.group[u.index()]
    }

    /// Sum of all terms, with multiplicity, evaluated in the ring.
    pub fn ring_sum(&self, sum: &FormalSum) -> usize {
        sum.to_pairs().into_iter().fold(self.ring.zero, |acc, (u, k)| {
            (0..k).fold(acc, |acc, _| self.ring.add(acc, self.ring_element(u)))
        })
    }

    pub fn pasture_null(&self, sum: &FormalSum) -> Result<bool, RingError> {
        if sum.norm() > 3 {
            return Err(RingError::NormTooLarge(sum.norm()));
        }
        Ok(self.ring_sum(sum) == self.ring.zero)
    }

    pub fn pasture(&self) -> Pasture {
        let space = SumSpace::new(&self.carrier, 3).expect("carrier fits");
        let null = space
            .sums()
            .iter()
            .filter(|s| self.ring_sum(s) == self.ring.zero)
            .cloned();
        Pasture::new(self.name(), self.carrier.clone(), null.collect::<Vec<_>>()).expect("ring sums give a pasture")
    }

    pub fn tract_embedding(&self) -> Tract {
        Tract::new(
            self.name(),
            self.carrier.clone(),
            Arc::new(RingSumOracle { field: self.clone() }),
        )
    }
}

/// Null iff the ring sum vanishes.
pub struct RingSumOracle {
    field: PartialField,
}

impl NullOracle for RingSumOracle {
    fn contains(&self, sum: &FormalSum) -> bool {
        self.field.ring_sum(sum) == self.field.ring.zero
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        None
    }

    fn describe(&self) -> String {
        format!("terms add to zero in {}", self.field.ring.name)
    }
}

/// Compares the fusion closure of the 3-term pasture with the tract
/// embedding. Only inclusion of the closure is guaranteed, so a failing
/// report is informative rather than an error.
pub fn compare_closure_with_embedding(p: &PartialField, bound: u32) -> Result<AxiomReport, CheckError> {
    let mut closure = fusion_closure_tract(&p.pasture(), bound)?;
    closure = Tract::new(
        format!("closure({})", p.name()),
        closure.carrier().clone(),
        closure.oracle().clone(),
    );
    compare_null_sets(Axiom::ClosureComparison, &closure, &p.tract_embedding(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::truncate3;

    fn gf(p: usize) -> PartialField {
        PartialField::new(FiniteRing::gf(p).unwrap(), &[1]).unwrap()
    }

    #[test]
    fn groups() {
        assert_eq!(gf(3).group(), &[1, 2]);
        let g2 = gf(2);
        assert_eq!(g2.group(), &[1]);
        assert_eq!(g2.carrier().epsilon(), g2.carrier().one());
        let z6 = PartialField::new(FiniteRing::zmod(6).unwrap(), &[]).unwrap();
        assert_eq!(z6.group(), &[1, 5]);
        assert!(matches!(
            PartialField::new(FiniteRing::zmod(6).unwrap(), &[2]),
            Err(RingError::NotUnit(_))
        ));
        assert_eq!(
            PartialField::all_units(FiniteRing::gf(7).unwrap())
                .unwrap()
                .group()
                .len(),
            6
        );
    }

    #[test]
    fn pasture_nullity() {
        let g3 = gf(3);
        let c = g3.carrier().clone();
        assert!(g3.pasture_null(&c.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());
        assert!(g3.pasture_null(&c.parse_terms(&["1", "2"]).unwrap()).unwrap());
        let g2 = gf(2);
        let c2 = g2.carrier().clone();
        assert!(!g2.pasture_null(&c2.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());
        assert!(matches!(
            g2.pasture_null(&c2.parse_terms(&["1", "1", "1", "1"]).unwrap()),
            Err(RingError::NormTooLarge(4))
        ));
    }

    #[test]
    fn embedding_nullity() {
        let g2 = gf(2).tract_embedding();
        let c2 = g2.carrier().clone();
        assert!(g2.is_null(&c2.parse_terms(&["1", "1", "1", "1"]).unwrap()).unwrap());
        assert!(g2.is_null(&c2.empty_sum()).unwrap());
        let g3 = gf(3).tract_embedding();
        let c3 = g3.carrier().clone();
        assert!(!g3.is_null(&c3.parse_terms(&["1", "1", "2"]).unwrap()).unwrap());
    }

    #[test]
    fn truncation_matches_pasture() {
        for p in [2, 3, 5] {
            let f = gf(p);
            let t = truncate3(&f.tract_embedding()).unwrap();
            let direct = f.pasture();
            assert_eq!(t.orbit_reps(), direct.orbit_reps());
        }
    }

    #[test]
    fn closure_is_contained_in_embedding() {
        for p in [2, 3, 5] {
            let r = compare_closure_with_embedding(&gf(p), 5).unwrap();
            assert_eq!(r.details["only_first"], 0, "{r:?}");
        }
    }

    #[test]
    fn bad_tables_rejected() {
        let names: Vec<String> = ["0", "1"].iter().map(|s| s.to_string()).collect();
        let add = vec![vec![0, 1], vec![1, 1]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(
            FiniteRing::new("bad", names, add, mul, 0, 1),
            Err(RingError::Axiom { .. })
        ));
        assert!(matches!(FiniteRing::gf(4), Err(RingError::UnsupportedField(4))));
    }
}
