//! Classical matroids on small labelled ground sets, given by circuits.

use std::collections::BTreeSet;
use std::fmt;

use crate::MatroidError;

/// Largest ground set for which duals are computed by subset enumeration.
pub const MAX_GROUND: usize = 24;

/// A matroid stored as its circuit family. Circuits are bitmasks over the
/// ground-set positions, kept sorted by size and then by element positions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    labels: Vec<String>,
    circuits: Vec<u64>,
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn circuit_key(mask: u64) -> (u32, Vec<usize>) {
    (mask.count_ones(), bits(mask).collect())
}

fn sort_circuits(circuits: &mut Vec<u64>) {
    circuits.sort_by_key(|&c| circuit_key(c));
    circuits.dedup();
}

/// Keeps only the inclusion-minimal nonempty masks.
pub(crate) fn minimal_sets(sets: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut sets: Vec<u64> = sets.into_iter().filter(|&s| s != 0).collect();
    sort_circuits(&mut sets);
    let mut kept: Vec<u64> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    sort_circuits(&mut kept);
    kept
}

impl Matroid {
    /// Builds a matroid from circuits given as lists of labels, checking the
    /// circuit axioms.
    pub fn from_circuits<S: AsRef<str>>(labels: Vec<String>, circuits: &[Vec<S>]) -> Result<Self, MatroidError> {
        let mut masks = Vec::with_capacity(circuits.len());
        let probe = Self::from_masks_unchecked(labels.clone(), Vec::new())?;
        for c in circuits {
            let mut mask = 0u64;
            for l in c {
                mask |= 1 << probe.index_of(l.as_ref())?;
            }
            masks.push(mask);
        }
        Self::from_masks(labels, masks)
    }

    pub fn from_masks(labels: Vec<String>, circuits: Vec<u64>) -> Result<Self, MatroidError> {
        let m = Self::from_masks_unchecked(labels, circuits)?;
        m.validate()?;
        Ok(m)
    }

    fn from_masks_unchecked(labels: Vec<String>, mut circuits: Vec<u64>) -> Result<Self, MatroidError> {
        if labels.len() > MAX_GROUND {
            return Err(MatroidError::TooLarge(format!(
                "ground set of {} elements (at most {MAX_GROUND})",
                labels.len()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(MatroidError::Ground("duplicate labels in the ground set".into()));
        }
        let full = full_mask(labels.len());
        if let Some(c) = circuits.iter().find(|&&c| c & !full != 0) {
            return Err(MatroidError::Ground(format!(
                "circuit mask {c:#b} leaves the ground set"
            )));
        }
        sort_circuits(&mut circuits);
        Ok(Self { labels, circuits })
    }

    fn validate(&self) -> Result<(), MatroidError> {
        let show = |c: u64| self.display_set(c);
        for &c in &self.circuits {
            if c == 0 {
                return Err(MatroidError::CircuitAxiom("the empty set is not a circuit".into()));
            }
        }
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                if a & b == a || a & b == b {
                    return Err(MatroidError::CircuitAxiom(format!(
                        "{} and {} are nested",
                        show(a),
                        show(b)
                    )));
                }
                for e in bits(a & b) {
                    let rest = (a | b) & !(1 << e);
                    if !self.circuits.iter().any(|&c| c & !rest == 0) {
                        return Err(MatroidError::CircuitAxiom(format!(
                            "no circuit inside ({} ∪ {}) - {}",
                            show(a),
                            show(b),
                            self.labels[e]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `U(r, n)` on labels `1..n`: every `(r+1)`-subset is a circuit.
    pub fn uniform(rank: usize, n: usize) -> Result<Self, MatroidError> {
        if rank > n {
            return Err(MatroidError::Ground(format!("rank {rank} exceeds {n} elements")));
        }
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge(format!("{n} elements")));
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let circuits = (0..1u64 << n).filter(|m| m.count_ones() as usize == rank + 1).collect();
        Self::from_masks(labels, circuits)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn circuits(&self) -> &[u64] {
        &self.circuits
    }

    pub fn index_of(&self, label: &str) -> Result<usize, MatroidError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatroidError::UnknownElement(label.to_string()))
    }

    pub fn is_circuit(&self, mask: u64) -> bool {
        self.circuits
            .binary_search_by_key(&circuit_key(mask), |&c| circuit_key(c))
            .is_ok()
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        !self.circuits.iter().any(|&c| c & !mask == 0)
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        let mut basis = 0u64;
        for i in bits(mask) {
            if self.is_independent(basis | 1 << i) {
                basis |= 1 << i;
            }
        }
        basis.count_ones() as usize
    }

    pub fn rank(&self) -> usize {
        self.rank_of(full_mask(self.len()))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.is_circuit(1 << i)
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        !self.circuits.iter().any(|&c| c >> i & 1 == 1)
    }

    /// Cocircuits are the minimal sets whose complement has smaller rank.
    pub fn dual(&self) -> Matroid {
        let n = self.len();
        let full = full_mask(n);
        let r = self.rank();
        let mut by_size: Vec<u64> = (1..=full).collect();
        by_size.sort_by_key(|&m| circuit_key(m));
        let mut found: Vec<u64> = Vec::new();
        for m in by_size {
            if found.iter().any(|&f| f & !m == 0) {
                continue;
            }
            if self.rank_of(full & !m) < r {
                found.push(m);
            }
        }
        Self::from_masks_unchecked(self.labels.clone(), found).expect("dual keeps the ground set")
    }

    /// `M \ e`: circuits avoiding `e`.
    pub fn delete(&self, label: &str) -> Result<Matroid, MatroidError> {
        let i = self.index_of(label)?;
        let circuits = self
            .circuits
            .iter()
            .filter(|&&c| c >> i & 1 == 0)
            .map(|&c| squeeze(c, i))
            .collect();
        Self::from_masks_unchecked(without(&self.labels, i), circuits)
    }

    /// `M / e`: minimal nonempty sets among `C - e`.
    pub fn contract(&self, label: &str) -> Result<Matroid, MatroidError> {
        let i = self.index_of(label)?;
        let circuits = minimal_sets(self.circuits.iter().map(|&c| squeeze(c & !(1 << i), i)));
        Self::from_masks_unchecked(without(&self.labels, i), circuits)
    }

    /// Circuits as sets of labels, for comparisons that ignore ground order.
    pub fn circuit_label_sets(&self) -> BTreeSet<BTreeSet<String>> {
        self.circuits
            .iter()
            .map(|&c| bits(c).map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    pub fn relabel(&self, from: &str, to: &str) -> Result<Matroid, MatroidError> {
        let i = self.index_of(from)?;
        let mut labels = self.labels.clone();
        labels[i] = to.to_string();
        Self::from_masks_unchecked(labels, self.circuits.clone())
    }

    pub fn display_set(&self, mask: u64) -> String {
        let names: Vec<&str> = bits(mask).map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Drops bit `i` and shifts the higher bits down.
pub(crate) fn squeeze(mask: u64, i: usize) -> u64 {
    let low = mask & ((1u64 << i) - 1);
    let high = (mask >> (i + 1)) << i;
    low | high
}

fn without(labels: &[String], i: usize) -> Vec<String> {
    labels
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, l)| l.clone())
        .collect()
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.circuits.iter().map(|&c| self.display_set(c)).collect();
        write!(f, "Matroid[{}; {}]", self.labels.join(","), cs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(m: &Matroid) -> Vec<Vec<String>> {
        m.circuits()
            .iter()
            .map(|&c| bits(c).map(|i| m.labels()[i].clone()).collect())
            .collect()
    }

    #[test]
    fn uniform_matroids() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(sets(&u23), vec![vec!["1", "2", "3"]]);
        assert_eq!(u23.rank(), 2);
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.dual(), u12);
        assert_eq!(Matroid::uniform(2, 4).unwrap().dual(), Matroid::uniform(2, 4).unwrap());
        assert_eq!(u23.dual(), Matroid::uniform(1, 3).unwrap());
    }

    #[test]
    fn minors() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(sets(&u23.contract("3").unwrap()), vec![vec!["1", "2"]]);
        assert!(u23.delete("3").unwrap().circuits().is_empty());
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(sets(&u12.contract("1").unwrap()), vec![vec!["2"]]);
        assert!(u12.contract("1").unwrap().is_loop(0));
    }

    #[test]
    fn duality_is_an_involution() {
        let m = Matroid::from_circuits(
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            &[vec!["a", "b"], vec!["c"]],
        )
        .unwrap();
        assert_eq!(m.dual().dual(), m);
        assert!(m.dual().is_coloop(2));
        assert!(m.is_coloop(3));
    }

    #[test]
    fn circuit_axioms_are_enforced() {
        let labels: Vec<String> = ["1", "2", "3"].map(String::from).to_vec();
        let nested = Matroid::from_circuits(labels.clone(), &[vec!["1"], vec!["1", "2"]]);
        assert!(matches!(nested, Err(MatroidError::CircuitAxiom(_))));
        let no_elim = Matroid::from_circuits(labels.clone(), &[vec!["1", "2"], vec!["2", "3"]]);
        assert!(matches!(no_elim, Err(MatroidError::CircuitAxiom(_))));
        assert!(Matroid::from_circuits(labels, &[vec!["4"]]).is_err());
    }

    #[test]
    fn squeeze_drops_a_position() {
        assert_eq!(squeeze(0b1011, 1), 0b101);
        assert_eq!(squeeze(0b1011, 0), 0b101);
        assert_eq!(squeeze(0b1011, 3), 0b011);
    }
}
