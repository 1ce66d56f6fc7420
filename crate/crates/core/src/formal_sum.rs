//! Formal sums: elements of the group semiring `N[F×]`.
//!
//! A [`FormalSum`] is a finite multiset of units of a fixed carrier, stored as
//! a dense vector of multiplicities indexed by [`Unit`]. The empty multiset is
//! the additive identity. Nothing cancels: `x + (-x)` is a sum of norm two.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a unit in a carrier's unit group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Unit(pub u16);

impl Unit {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumError {
    #[error("formal sums live over carriers with {left} and {right} units")]
    CarrierMismatch { left: usize, right: usize },
    #[error("unit index {unit} out of range for a carrier with {units} units")]
    UnitOutOfRange { unit: usize, units: usize },
}

/// A multiset of units with positive multiplicities.
///
/// Equality and hashing are structural on the multiplicity vector, so two sums
/// are equal exactly when they are equal as multisets over the same carrier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum {
    counts: Vec<u32>,
}

impl FormalSum {
    /// The empty sum over a carrier with `units` units.
    pub fn empty(units: usize) -> Self {
        Self { counts: vec![0; units] }
    }

    pub fn singleton(units: usize, u: Unit) -> Self {
        let mut s = Self::empty(units);
        s.counts[u.index()] = 1;
        s
    }

    /// Builds a sum from a dense multiplicity vector.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        Self { counts }
    }

    pub fn from_terms(units: usize, terms: &[Unit]) -> Result<Self, SumError> {
        let mut s = Self::empty(units);
        for &t in terms {
            if t.index() >= units {
                return Err(SumError::UnitOutOfRange { unit: t.index(), units });
            }
            s.counts[t.index()] += 1;
        }
        Ok(s)
    }

    /// Number of units of the carrier this sum lives over.
    #[inline]
    pub fn units(&self) -> usize {
        self.counts.len()
    }

    #[inline]
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    #[inline]
    pub fn count(&self, u: Unit) -> u32 {
        self.counts[u.index()]
    }

    /// Total multiplicity `‖α‖`.
    pub fn norm(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Distinct units occurring in the sum, in index order.
    pub fn support(&self) -> impl Iterator<Item = Unit> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| Unit(i as u16))
    }

    /// Terms with repetition, sorted by unit index.
    pub fn terms(&self) -> Vec<Unit> {
        let mut out = Vec::with_capacity(self.norm() as usize);
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(Unit(i as u16), c as usize));
        }
        out
    }

    /// Canonical wire form: `(unit, multiplicity)` pairs sorted by unit.
    pub fn to_pairs(&self) -> Vec<(Unit, u32)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (Unit(i as u16), c))
            .collect()
    }

    pub fn checked_add(&self, other: &FormalSum) -> Result<FormalSum, SumError> {
        self.same_carrier(other)?;
        Ok(FormalSum {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        })
    }

    /// Adds one copy of `u`.
    pub fn with_term(&self, u: Unit) -> FormalSum {
        let mut s = self.clone();
        s.counts[u.index()] += 1;
        s
    }

    /// Removes one copy of `u`, if present.
    pub fn without_term(&self, u: Unit) -> Option<FormalSum> {
        if self.counts[u.index()] == 0 {
            return None;
        }
        let mut s = self.clone();
        s.counts[u.index()] -= 1;
        Some(s)
    }

    /// Multiset difference `self - other`, defined when `other ⊆ self`.
    pub fn checked_sub(&self, other: &FormalSum) -> Option<FormalSum> {
        if self.units() != other.units() {
            return None;
        }
        let mut counts = Vec::with_capacity(self.counts.len());
        for (a, b) in self.counts.iter().zip(&other.counts) {
            counts.push(a.checked_sub(*b)?);
        }
        Some(FormalSum { counts })
    }

    /// Whether `other` is a sub-multiset of `self`.
    pub fn contains_sum(&self, other: &FormalSum) -> bool {
        self.units() == other.units() && self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    fn same_carrier(&self, other: &FormalSum) -> Result<(), SumError> {
        if self.units() != other.units() {
            return Err(SumError::CarrierMismatch {
                left: self.units(),
                right: other.units(),
            });
        }
        Ok(())
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;

    /// Multiset union.
    ///
    /// Panics when the two sums live over carriers of different sizes; use
    /// [`FormalSum::checked_add`] for a fallible version.
    fn add(self, rhs: &FormalSum) -> FormalSum {
        match self.checked_add(rhs) {
            Ok(s) => s,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Add for FormalSum {
    type Output = FormalSum;

    fn add(self, rhs: FormalSum) -> FormalSum {
        &self + &rhs
    }
}

/// `(norm, lex)` order: smaller norm first, then the sorted term sequences
/// compared lexicographically.
impl Ord for FormalSum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| {
                // Equal norms: at the first differing unit, the sum holding more
                // copies of it has the smaller term sequence.
                for (a, b) in self.counts.iter().zip(&other.counts) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.units().cmp(&other.units()))
    }
}

impl PartialOrd for FormalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FormalSum{:?}",
            self.to_pairs().iter().map(|(u, c)| (u.0, *c)).collect::<Vec<_>>()
        )
    }
}
