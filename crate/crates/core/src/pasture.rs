//! Pastures: null sets recorded only up to norm three.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use thiserror::Error;

use crate::carrier::Carrier;
use crate::formal_sum::FormalSum;
use crate::tract::{NullOracle, Tract};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PastureError {
    #[error("pasture relations have norm at most 3, got {0}")]
    NormTooLarge(u32),
    #[error("the empty sum must be null")]
    MissingEmpty,
    #[error("1 + ε must be null")]
    MissingOnePlusEpsilon,
    #[error("sum lives over the wrong carrier")]
    CarrierMismatch,
}

/// A carrier with an orbit-closed set of null sums of norm `≤ 3`.
#[derive(Debug, Clone)]
pub struct Pasture {
    name: String,
    carrier: Arc<Carrier>,
    reps: BTreeSet<FormalSum>,
    members: HashSet<FormalSum>,
}

impl Pasture {
    /// Builds a pasture from generating sums; every orbit they meet is added.
    pub fn new(
        name: impl Into<String>,
        carrier: Arc<Carrier>,
        sums: impl IntoIterator<Item = FormalSum>,
    ) -> Result<Self, PastureError> {
        let mut reps = BTreeSet::new();
        let mut members = HashSet::new();
        for s in sums {
            if s.units() != carrier.n_units() {
                return Err(PastureError::CarrierMismatch);
            }
            if s.norm() > 3 {
                return Err(PastureError::NormTooLarge(s.norm()));
            }
            reps.insert(carrier.orbit_rep(&s));
            members.extend(carrier.orbit(&s));
        }
        if !members.contains(&carrier.empty_sum()) {
            return Err(PastureError::MissingEmpty);
        }
        let one_eps = carrier.sum_of(&[Some(carrier.one()), Some(carrier.epsilon())]);
        if !members.contains(&one_eps) {
            return Err(PastureError::MissingOnePlusEpsilon);
        }
        Ok(Self {
            name: name.into(),
            carrier,
            reps,
            members,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    /// One `(norm, lex)`-least representative per orbit.
    pub fn orbit_reps(&self) -> &BTreeSet<FormalSum> {
        &self.reps
    }

    pub fn members(&self) -> impl Iterator<Item = &FormalSum> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, sum: &FormalSum) -> bool {
        self.members.contains(sum)
    }

    /// The pasture viewed as a tract whose oracle is valid up to norm 3.
    pub fn to_tract(&self) -> Tract {
        Tract::new(self.name.clone(), self.carrier.clone(), Arc::new(self.clone()))
    }
}

impl NullOracle for Pasture {
    fn contains(&self, sum: &FormalSum) -> bool {
        self.members.contains(sum)
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        Some(3)
    }

    fn describe(&self) -> String {
        format!("pasture {} ({} orbits)", self.name, self.reps.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_are_expanded_and_validated() {
        let c = Arc::new(Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap());
        let s = |t: &[&str]| c.parse_terms(t).unwrap();
        let p = Pasture::new("S", c.clone(), [s(&[]), s(&["1", "-1"]), s(&["1", "1", "-1"])]).unwrap();
        assert!(p.contains(&s(&["-1", "-1", "1"])));
        assert_eq!(p.orbit_reps().len(), 3);
        assert_eq!(p.len(), 4);
        assert_eq!(
            Pasture::new("bad", c.clone(), [s(&[])]).unwrap_err(),
            PastureError::MissingOnePlusEpsilon
        );
        assert_eq!(
            Pasture::new("bad", c.clone(), [s(&["1", "-1", "1", "-1"])]).unwrap_err(),
            PastureError::NormTooLarge(4)
        );
    }
}
