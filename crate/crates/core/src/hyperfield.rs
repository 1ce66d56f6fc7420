//! Finite hyperrings and hyperfields with multivalued addition, their tracts
//! and pastures, and the stringency checks.
//!
//! Elements are indexed with zero first, then the units in carrier order,
//! then any nonzero non-units (products such as `S×S` have some). Hypersums
//! are bitmasks over element indices, so at most 64 elements are supported.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::axioms::{check_strong_fusion, CheckError};
use crate::carrier::{Carrier, CarrierError};
use crate::closure::{compare_null_sets, fusion_closure_tract, truncate3};
use crate::formal_sum::{FormalSum, Unit};
use crate::pasture::Pasture;
use crate::report::{Axiom, AxiomReport, Witness};
use crate::tract::{NullOracle, Tract};

pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperfieldError {
    #[error("hyperfields are limited to {MAX_ELEMENTS} elements, got {0}")]
    TooLarge(usize),
    #[error("table has the wrong shape: {0}")]
    Shape(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("-1 is not a unit")]
    MinusOneNotUnit,
    #[error(transparent)]
    Carrier(#[from] CarrierError),
}

/// Set of elements as a bitmask over element indices.
pub type ElementSet = u64;

#[derive(Debug, Clone)]
pub struct Hyperfield {
    name: String,
    names: Vec<String>,
    units: usize,
    one: usize,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    sum: Vec<Vec<ElementSet>>,
    carrier: Arc<Carrier>,
}

impl Hyperfield {
    /// Builds a hyperring from tables indexed by position in `names`.
    /// Elements are reordered internally (zero, units, non-units).
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        zero: usize,
        one: usize,
        mul: Vec<Vec<usize>>,
        neg: Vec<usize>,
        sum: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, HyperfieldError> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(HyperfieldError::TooLarge(n));
        }
        let square = |len: usize, what: &str| {
            if len != n {
                Err(HyperfieldError::Shape(what.to_string()))
            } else {
                Ok(())
            }
        };
        square(mul.len(), "mul rows")?;
        square(neg.len(), "neg")?;
        square(sum.len(), "sum rows")?;
        for i in 0..n {
            square(mul[i].len(), "mul columns")?;
            square(sum[i].len(), "sum columns")?;
            if mul[i].iter().chain(&[neg[i]]).any(|&k| k >= n) || sum[i].iter().flatten().any(|&k| k >= n) {
                return Err(HyperfieldError::Shape("entry out of range".into()));
            }
        }
        if zero >= n || one >= n {
            return Err(HyperfieldError::Shape("zero or one out of range".into()));
        }
        let is_unit = |a: usize| a != zero && (0..n).any(|b| mul[a][b] == one);
        let order: Vec<usize> = std::iter::once(zero)
            .chain((0..n).filter(|&a| is_unit(a)))
            .chain((0..n).filter(|&a| a != zero && !is_unit(a)))
            .collect();
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let units = order.iter().filter(|&&a| is_unit(a)).count();
        let names: Vec<String> = order.iter().map(|&o| names[o].clone()).collect();
        let mul: Vec<Vec<usize>> = order
            .iter()
            .map(|&a| order.iter().map(|&b| pos[mul[a][b]]).collect())
            .collect();
        let neg: Vec<usize> = order.iter().map(|&a| pos[neg[a]]).collect();
        let sum: Vec<Vec<ElementSet>> = order
            .iter()
            .map(|&a| {
                order
                    .iter()
                    .map(|&b| sum[a][b].iter().fold(0, |m, &k| m | 1u64 << pos[k]))
                    .collect()
            })
            .collect();
        let one = pos[one];
        let minus_one = neg[one];
        if minus_one == 0 || minus_one > units {
            return Err(HyperfieldError::MinusOneNotUnit);
        }
        let unit_mul = (1..=units)
            .map(|a| (1..=units).map(|b| Unit((mul[a][b] - 1) as u16)).collect())
            .collect();
        let carrier = Carrier::new(
            names[0].clone(),
            names[1..=units].to_vec(),
            unit_mul,
            Unit((one - 1) as u16),
            Unit((minus_one - 1) as u16),
        )?;
        Ok(Self {
            name: name.into(),
            names,
            units,
            one,
            mul,
            neg,
            sum,
            carrier: Arc::new(carrier),
        })
    }

    /// Builds a hyperring from element names.
    pub fn from_named_tables(
        name: impl Into<String>,
        names: Vec<String>,
        zero: &str,
        one: &str,
        mul: &[Vec<String>],
        neg: &[String],
        sum: &[Vec<Vec<String>>],
    ) -> Result<Self, HyperfieldError> {
        let idx = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| HyperfieldError::UnknownElement(s.to_string()))
        };
        let z = idx(zero)?;
        let o = idx(one)?;
        let mul = mul
            .iter()
            .map(|r| r.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let neg = neg.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>()?;
        let sum = sum
            .iter()
            .map(|r| {
                r.iter()
                    .map(|cell| cell.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(name, names, z, o, mul, neg, sum)
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
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn unit_count(&self) -> usize {
        self.units
    }

    /// Whether every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        self.units + 1 == self.names.len()
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    /// Element index of a carrier unit.
    pub fn unit_element(&self, u: Unit) -> usize {
        u.index() + 1
    }

    pub fn hypersum2(&self, a: usize, b: usize) -> ElementSet {
        self.sum[a][b]
    }

    /// `A ⊞ b := ⋃_{x ∈ A} x ⊞ b`.
    pub fn set_plus(&self, set: ElementSet, b: usize) -> ElementSet {
        members(set).fold(0, |m, x| m | self.sum[x][b])
    }

    /// `A ⊞ B`.
    pub fn set_sum(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        members(b).fold(0, |m, y| m | self.set_plus(a, y))
    }

    /// Left fold `((x₁ ⊞ x₂) ⊞ x₃) ⊞ …`; the empty list gives `{0}`.
    pub fn hypersum_many(&self, xs: &[usize]) -> ElementSet {
        match xs.split_first() {
            None => 1,
            Some((&first, rest)) => rest.iter().fold(1u64 << first, |set, &x| self.set_plus(set, x)),
        }
    }

    pub fn set_names(&self, set: ElementSet) -> Vec<&str> {
        members(set).map(|i| self.names[i].as_str()).collect()
    }

    /// `{xy : x ∈ A, y ∈ B}`.
    pub fn set_mul(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        members(a).fold(0, |m, x| members(b).fold(m, |m, y| m | 1u64 << self.mul[x][y]))
    }

    fn name_of(&self, a: usize) -> String {
        self.names[a].clone()
    }

    fn triple_witness(&self, a: usize, b: usize, c: usize) -> Witness {
        Witness::new()
            .text("a", self.name_of(a))
            .text("b", self.name_of(b))
            .text("c", self.name_of(c))
    }
}

/// Indices of the elements of a set, ascending.
pub fn members(set: ElementSet) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| set >> i & 1 == 1)
}

/// Exhaustive (HG1)–(HG6) and (HR1)–(HR4) checks over all elements.
pub fn check_hyperfield_axioms(h: &Hyperfield) -> Vec<AxiomReport> {
    let n = h.len();
    let bound = 3;
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    let mut out = Vec::new();

    let hg1 = pairs().find(|&(a, b)| h.sum[a][b] == 0);
    out.push(AxiomReport::from_witness(
        Axiom::HG1,
        bound,
        hg1.map(|(a, b)| Witness::new().text("a", h.name_of(a)).text("b", h.name_of(b))),
    ));

    let hg2 = triples().find(|&(a, b, c)| h.set_plus(h.sum[a][b], c) != h.set_sum(1u64 << a, h.sum[b][c]));
    out.push(AxiomReport::from_witness(
        Axiom::HG2,
        bound,
        hg2.map(|(a, b, c)| h.triple_witness(a, b, c)),
    ));

    let hg3 = (0..n).find(|&a| h.sum[0][a] != 1u64 << a || h.sum[a][0] != 1u64 << a);
    out.push(AxiomReport::from_witness(
        Axiom::HG3,
        bound,
        hg3.map(|a| Witness::new().text("a", h.name_of(a))),
    ));

    let hg4 = (0..n).find(|&a| {
        let inverses: Vec<usize> = (0..n).filter(|&b| h.sum[a][b] & 1 == 1).collect();
        inverses != [h.neg[a]]
    });
    out.push(AxiomReport::from_witness(
        Axiom::HG4,
        bound,
        hg4.map(|a| Witness::new().text("a", h.name_of(a))),
    ));

    let hg5 = pairs().find(|&(a, b)| h.sum[a][b] != h.sum[b][a]);
    out.push(AxiomReport::from_witness(
        Axiom::HG5,
        bound,
        hg5.map(|(a, b)| Witness::new().text("a", h.name_of(a)).text("b", h.name_of(b))),
    ));

    let hg6 = triples().find(|&(a, b, c)| {
        let forward = h.sum[a][b] >> c & 1 == 1;
        let back = h.sum[c][h.neg[a]] >> b & 1 == 1;
        forward != back
    });
    out.push(AxiomReport::from_witness(
        Axiom::HG6,
        bound,
        hg6.map(|(a, b, c)| h.triple_witness(a, b, c)),
    ));

    let hypergroup_ok = out.iter().all(|r| r.holds);
    let hr1 = AxiomReport::from_witness(
        Axiom::HR1,
        bound,
        (!hypergroup_ok).then(|| Witness::new().text("reason", "additive hypergroup axioms fail")),
    );
    out.push(hr1);

    let hr2 = triples().find(|&(a, b, c)| {
        h.mul[h.mul[a][b]][c] != h.mul[a][h.mul[b][c]] || h.mul[a][b] != h.mul[b][a] || h.mul[h.one][a] != a
    });
    out.push(AxiomReport::from_witness(
        Axiom::HR2,
        bound,
        hr2.map(|(a, b, c)| h.triple_witness(a, b, c)),
    ));

    let hr3 = (0..n).find(|&a| h.mul[0][a] != 0 || h.mul[a][0] != 0);
    out.push(AxiomReport::from_witness(
        Axiom::HR3,
        bound,
        hr3.map(|a| Witness::new().text("a", h.name_of(a))),
    ));

    let hr4 = triples().find(|&(a, b, c)| h.set_mul(1u64 << a, h.sum[b][c]) != h.sum[h.mul[a][b]][h.mul[a][c]]);
    out.push(AxiomReport::from_witness(
        Axiom::HR4,
        bound,
        hr4.map(|(a, b, c)| h.triple_witness(a, b, c)),
    ));
    out
}

/// `(a ⊞ b)(c ⊞ d) = ac ⊞ bc ⊞ ad ⊞ bd` for all quadruples; returns the
/// first failing quadruple.
pub fn doubly_distributive_violation(h: &Hyperfield) -> Option<[usize; 4]> {
    let n = h.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let left = h.set_mul(h.sum[a][b], h.sum[c][d]);
                    let right = h.hypersum_many(&[h.mul[a][c], h.mul[b][c], h.mul[a][d], h.mul[b][d]]);
                    if left != right {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Null set `Σ xᵢ ∈ N ⟺ 0 ∈ ⊞ xᵢ`.
pub struct HypersumOracle {
    h: Hyperfield,
}

impl NullOracle for HypersumOracle {
    fn contains(&self, sum: &FormalSum) -> bool {
        let terms: Vec<usize> = sum.terms().into_iter().map(|u| self.h.unit_element(u)).collect();
        self.h.hypersum_many(&terms) & 1 == 1
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        None
    }

    fn describe(&self) -> String {
        format!("0 in the iterated hypersum of {}", self.h.name)
    }
}

pub fn tract_of(h: &Hyperfield) -> Tract {
    Tract::new(
        h.name.clone(),
        h.carrier.clone(),
        Arc::new(HypersumOracle { h: h.clone() }),
    )
}

pub fn pasture_of(h: &Hyperfield) -> Pasture {
    truncate3(&tract_of(h)).expect("hypersum oracles are unbounded")
}

/// `|a ⊞ b| = 1` for all nonzero `a ≠ -b`. The witness is the first failing
/// pair in element order.
pub fn is_stringent(h: &Hyperfield) -> AxiomReport {
    let n = h.len();
    let hit = (1..n)
        .flat_map(|a| (1..n).map(move |b| (a, b)))
        .find(|&(a, b)| a != h.neg[b] && h.sum[a][b].count_ones() != 1);
    let w = hit.map(|(a, b)| {
        Witness::new()
            .text("a", h.name_of(a))
            .text("b", h.name_of(b))
            .text("sum", format!("{{{}}}", h.set_names(h.sum[a][b]).join(", ")))
            .number("size", h.sum[a][b].count_ones() as u64)
    });
    AxiomReport::from_witness(Axiom::Stringent, 2, w)
}

/// Every zero-free iterated hypersum of at most `max_len` nonzero elements
/// is a singleton. Multisets suffice since hypersums are commutative and
/// associative.
pub fn zero_free_sums_are_singletons(h: &Hyperfield, max_len: usize) -> Option<Vec<usize>> {
    fn walk(h: &Hyperfield, start: usize, left: usize, acc: ElementSet, seq: &mut Vec<usize>) -> Option<Vec<usize>> {
        if !seq.is_empty() && acc & 1 == 0 && acc.count_ones() != 1 {
            return Some(seq.clone());
        }
        if left == 0 {
            return None;
        }
        for x in start..h.len() {
            let next = if seq.is_empty() { 1u64 << x } else { h.set_plus(acc, x) };
            seq.push(x);
            let found = walk(h, x, left - 1, next, seq);
            seq.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    walk(h, 1, max_len, 0, &mut Vec::new())
}

/// Fusion closure of the pasture agrees with the tract on all norms `≤ bound`.
pub fn check_hap(h: &Hyperfield, bound: u32) -> Result<AxiomReport, CheckError> {
    let closure = fusion_closure_tract(&pasture_of(h), bound)?;
    compare_null_sets(Axiom::Hap, &closure, &tract_of(h), bound)
}

/// Stringency and (SF) of the tract up to `bound` must agree, and a stringent
/// hyperfield must have singleton zero-free hypersums of up to `bound` terms.
pub fn check_stringency_equivalence(h: &Hyperfield, bound: u32) -> Result<AxiomReport, CheckError> {
    let stringent = is_stringent(h);
    let singletons = zero_free_sums_are_singletons(h, bound as usize);
    let sf = check_strong_fusion(&tract_of(h), bound)?;
    let verdicts = [stringent.holds, singletons.is_none(), sf.holds];
    let agree = verdicts[0] == verdicts[2] && (!verdicts[0] || verdicts[1]);
    let w = (!agree).then(|| {
        Witness::new()
            .text("stringent", verdicts[0].to_string())
            .text("zero_free_singletons", verdicts[1].to_string())
            .text("strong_fusion", verdicts[2].to_string())
    });
    let mut report = AxiomReport::from_witness(Axiom::StringencyEquivalence, bound, w)
        .detail("stringent", verdicts[0])
        .detail("zero_free_singletons", verdicts[1])
        .detail("strong_fusion", verdicts[2]);
    if let Some(seq) = singletons {
        let names: Vec<&str> = seq.iter().map(|&i| h.names[i].as_str()).collect();
        report = report.detail("non_singleton_sum", names.join(" + "));
    }
    Ok(report)
}

fn table_from<F>(names: &[String], f: F) -> Vec<Vec<Vec<usize>>>
where
    F: Fn(usize, usize) -> Vec<usize>,
{
    (0..names.len())
        .map(|a| (0..names.len()).map(|b| f(a, b)).collect())
        .collect()
}

/// The sign hyperfield `{0, 1, -1}`: like signs add to themselves, opposite
/// signs add to everything.
pub fn sign() -> Hyperfield {
    let names: Vec<String> = ["0", "1", "-1"].iter().map(|s| s.to_string()).collect();
    let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
    let neg = vec![0, 2, 1];
    let sum = table_from(&names, |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![x],
        (x, y) if x == y => vec![x],
        _ => vec![0, 1, 2],
    });
    Hyperfield::new("sign", names, 0, 1, mul, neg, sum).expect("valid tables")
}

/// The field `Z/p` viewed as a hyperfield with singleton sums.
pub fn prime_field(p: usize) -> Hyperfield {
    let names: Vec<String> = (0..p).map(|i| i.to_string()).collect();
    let mul = (0..p).map(|a| (0..p).map(|b| a * b % p).collect()).collect();
    let neg = (0..p).map(|a| (p - a) % p).collect();
    let sum = table_from(&names, |a, b| vec![(a + b) % p]);
    Hyperfield::new(format!("gf{p}"), names, 0, 1 % p, mul, neg, sum).expect("valid tables")
}

/// Componentwise product; elements are named `(a,b)`.
pub fn product(h1: &Hyperfield, h2: &Hyperfield) -> Hyperfield {
    let (n1, n2) = (h1.len(), h2.len());
    let pair = |a: usize, b: usize| a * n2 + b;
    let names: Vec<String> = (0..n1)
        .flat_map(|a| (0..n2).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", h1.names[a], h2.names[b]))
        .collect();
    let split = |x: usize| (x / n2, x % n2);
    let n = n1 * n2;
    let mul = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let ((a, b), (c, d)) = (split(x), split(y));
                    pair(h1.mul[a][c], h2.mul[b][d])
                })
                .collect()
        })
        .collect();
    let neg = (0..n)
        .map(|x| {
            let (a, b) = split(x);
            pair(h1.neg[a], h2.neg[b])
        })
        .collect();
    let sum = table_from(&names, |x, y| {
        let ((a, b), (c, d)) = (split(x), split(y));
        members(h1.sum[a][c])
            .flat_map(|p| members(h2.sum[b][d]).map(move |q| pair(p, q)))
            .collect()
    });
    Hyperfield::new(
        format!("{}x{}", h1.name, h2.name),
        names,
        pair(0, 0),
        pair(h1.one, h2.one),
        mul,
        neg,
        sum,
    )
    .expect("products of valid tables are valid")
}

/// Sign hyperfield with `1 ⊞ 1 = {1, -1}`, which breaks reversibility.
pub fn broken_reversibility() -> Hyperfield {
    let s = sign();
    let names = s.names.clone();
    let sum = table_from(&names, |a, b| {
        if a == 1 && b == 1 {
            vec![1, 2]
        } else {
            members(s.sum[a][b]).collect()
        }
    });
    Hyperfield::new("broken", names, 0, 1, s.mul.clone(), s.neg.clone(), sum).expect("valid tables")
}

/// Index of every unit's element, for tests that walk tract sums.
pub fn unit_elements(h: &Hyperfield) -> Vec<usize> {
    (1..=h.units).collect()
}

/// Parallel check that the tract of `h` is unchanged under a permutation of
/// the summands, for sums of at most `max_len` terms.
pub fn hypersum_order_violation(h: &Hyperfield, max_len: usize) -> Option<Vec<usize>> {
    let n = h.len();
    let mut seqs: Vec<Vec<usize>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_len {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        all.extend(seqs.iter().cloned());
    }
    all.into_par_iter().find_map_first(|seq| {
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        (h.hypersum_many(&seq) != h.hypersum_many(&sorted)).then_some(seq)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(h: &Hyperfield, names: &[&str]) -> ElementSet {
        names.iter().fold(0, |m, n| m | 1u64 << h.element(n).unwrap())
    }

    #[test]
    fn sign_hypersums() {
        let s = sign();
        let (one, minus) = (s.element("1").unwrap(), s.element("-1").unwrap());
        assert_eq!(s.hypersum2(one, one), set(&s, &["1"]));
        assert_eq!(s.hypersum2(one, minus), set(&s, &["-1", "0", "1"]));
        assert_eq!(s.hypersum2(0, minus), set(&s, &["-1"]));
        assert_eq!(s.hypersum_many(&[one, one, minus]), set(&s, &["-1", "0", "1"]));
        assert_eq!(s.hypersum_many(&[one, one, one]), set(&s, &["1"]));
        assert_eq!(s.hypersum_many(&[minus]), set(&s, &["-1"]));
    }

    #[test]
    fn axioms_hold_for_builtins() {
        for h in [sign(), product(&sign(), &sign()), prime_field(2), prime_field(3)] {
            for r in check_hyperfield_axioms(&h) {
                assert!(r.holds, "{} {:?}", h.name(), r);
            }
        }
    }

    #[test]
    fn broken_reversibility_is_caught() {
        let reports = check_hyperfield_axioms(&broken_reversibility());
        let hg6 = reports.iter().find(|r| r.axiom == Axiom::HG6).unwrap();
        assert!(!hg6.holds);
        let w = hg6.witness.as_ref().unwrap();
        let h = broken_reversibility();
        let get = |k: &str| match w.get(k) {
            Some(crate::report::WitnessPart::Text(t)) => h.element(t).unwrap(),
            _ => panic!("missing {k}"),
        };
        let (a, b, c) = (get("a"), get("b"), get("c"));
        let forward = h.hypersum2(a, b) >> c & 1 == 1;
        let back = h.hypersum2(c, h.neg(a)) >> b & 1 == 1;
        assert_ne!(forward, back);
    }

    #[test]
    fn stringency_of_builtins() {
        assert!(is_stringent(&sign()).holds);
        assert!(is_stringent(&prime_field(2)).holds);
        let sxs = product(&sign(), &sign());
        let r = is_stringent(&sxs);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.get("a"), Some(&crate::report::WitnessPart::Text("(1,1)".into())));
        assert_eq!(w.get("b"), Some(&crate::report::WitnessPart::Text("(1,-1)".into())));
        assert_eq!(w.get("size"), Some(&crate::report::WitnessPart::Number(3)));
    }

    #[test]
    fn product_units_and_tract() {
        let sxs = product(&sign(), &sign());
        assert_eq!(sxs.len(), 9);
        assert_eq!(sxs.unit_count(), 4);
        assert!(!sxs.is_field());
        let t = tract_of(&sxs);
        let c = t.carrier().clone();
        assert_eq!(c.name(c.epsilon()), "(-1,-1)");
        assert!(t.is_null(&c.parse_terms(&["(1,1)", "(-1,-1)"]).unwrap()).unwrap());
        assert!(!t.is_null(&c.parse_terms(&["(1,1)", "(1,-1)"]).unwrap()).unwrap());
    }

    #[test]
    fn sign_is_doubly_distributive() {
        assert_eq!(doubly_distributive_violation(&sign()), None);
    }

    #[test]
    fn hypersums_ignore_order() {
        assert_eq!(hypersum_order_violation(&sign(), 4), None);
        assert_eq!(hypersum_order_violation(&product(&sign(), &sign()), 3), None);
    }
}
