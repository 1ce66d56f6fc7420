//! Tracts: a carrier, a null-set oracle with a validity bound, and an involution.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::carrier::Carrier;
use crate::formal_sum::{FormalSum, Unit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TractError {
    #[error("sum of norm {norm} is outside the null-set oracle's validity bound {bound}")]
    OutOfBound { norm: u32, bound: u32 },
    #[error("sum lives over {got} units but the tract has {expected}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("invalid involution: {0}")]
    Involution(String),
    #[error("invalid morphism: {0}")]
    Morphism(String),
    #[error("{0}")]
    Invalid(String),
}

/// Membership predicate for a null set `N_F ⊆ N[F×]`.
///
/// Answers are only meaningful for sums whose norm does not exceed
/// [`NullOracle::valid_norm_bound`]; [`Tract::is_null`] enforces this.
pub trait NullOracle: Send + Sync {
    fn contains(&self, sum: &FormalSum) -> bool;

    /// `None` means the oracle is exact for every norm.
    fn valid_norm_bound(&self) -> Option<u32>;

    fn describe(&self) -> String {
        "null-set oracle".to_string()
    }
}

/// A null set given by a closure, valid up to an optional bound.
pub struct FnOracle<F> {
    f: F,
    bound: Option<u32>,
    label: String,
}

impl<F> FnOracle<F>
where
    F: Fn(&FormalSum) -> bool + Send + Sync,
{
    pub fn new(label: impl Into<String>, bound: Option<u32>, f: F) -> Self {
        Self {
            f,
            bound,
            label: label.into(),
        }
    }
}

impl<F> NullOracle for FnOracle<F>
where
    F: Fn(&FormalSum) -> bool + Send + Sync,
{
    fn contains(&self, sum: &FormalSum) -> bool {
        (self.f)(sum)
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        self.bound
    }

    fn describe(&self) -> String {
        self.label.clone()
    }
}

/// A unit-preserving, multiplicative self-map of order at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    map: Vec<Unit>,
}

impl Involution {
    pub fn identity(carrier: &Carrier) -> Self {
        Self {
            map: carrier.units().collect(),
        }
    }

    pub fn new(carrier: &Carrier, map: Vec<Unit>) -> Result<Self, TractError> {
        if map.len() != carrier.n_units() || map.iter().any(|u| u.index() >= carrier.n_units()) {
            return Err(TractError::Involution("map must send every unit to a unit".into()));
        }
        for a in carrier.units() {
            if map[map[a.index()].index()] != a {
                return Err(TractError::Involution(format!(
                    "not of order two at {}",
                    carrier.name(a)
                )));
            }
            for b in carrier.units() {
                if map[carrier.mul(a, b).index()] != carrier.mul(map[a.index()], map[b.index()]) {
                    return Err(TractError::Involution(format!(
                        "not multiplicative at ({}, {})",
                        carrier.name(a),
                        carrier.name(b)
                    )));
                }
            }
        }
        Ok(Self { map })
    }

    #[inline]
    pub fn apply(&self, u: Unit) -> Unit {
        self.map[u.index()]
    }

    pub fn apply_sum(&self, sum: &FormalSum) -> FormalSum {
        let mut counts = vec![0u32; sum.units()];
        for (u, c) in sum.to_pairs() {
            counts[self.apply(u).index()] += c;
        }
        FormalSum::from_counts(counts)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, u)| u.index() == i)
    }
}

/// A tract `(F, N_F)` together with an involution.
#[derive(Clone)]
pub struct Tract {
    name: String,
    carrier: Arc<Carrier>,
    null: Arc<dyn NullOracle>,
    involution: Involution,
}

impl Tract {
    pub fn new(name: impl Into<String>, carrier: Arc<Carrier>, null: Arc<dyn NullOracle>) -> Self {
        let involution = Involution::identity(&carrier);
        Self {
            name: name.into(),
            carrier,
            null,
            involution,
        }
    }

    pub fn with_involution(mut self, involution: Involution) -> Result<Self, TractError> {
        if involution.map.len() != self.carrier.n_units() {
            return Err(TractError::Involution("size does not match the carrier".into()));
        }
        self.involution = involution;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn oracle(&self) -> &Arc<dyn NullOracle> {
        &self.null
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn valid_norm_bound(&self) -> Option<u32> {
        self.null.valid_norm_bound()
    }

    /// Errors unless every sum of norm `≤ bound` is inside the oracle's contract.
    pub fn require_bound(&self, bound: u32) -> Result<(), TractError> {
        match self.null.valid_norm_bound() {
            Some(b) if bound > b => Err(TractError::OutOfBound { norm: bound, bound: b }),
            _ => Ok(()),
        }
    }

    pub fn is_null(&self, sum: &FormalSum) -> Result<bool, TractError> {
        if sum.units() != self.carrier.n_units() {
            return Err(TractError::CarrierMismatch {
                expected: self.carrier.n_units(),
                got: sum.units(),
            });
        }
        self.require_bound(sum.norm())?;
        Ok(self.null.contains(sum))
    }

    /// Oracle lookup without the bound check, for callers that already
    /// validated the norm range.
    #[inline]
    pub(crate) fn null_unchecked(&self, sum: &FormalSum) -> bool {
        self.null.contains(sum)
    }
}

impl fmt::Debug for Tract {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tract")
            .field("name", &self.name)
            .field("carrier", &self.carrier)
            .field("oracle", &self.null.describe())
            .field("bound", &self.null.valid_norm_bound())
            .finish()
    }
}

/// A map of tracts, given on units; zero maps to zero.
#[derive(Clone)]
pub struct Morphism {
    source: Tract,
    target: Tract,
    map: Vec<Unit>,
}

impl Morphism {
    /// Builds a morphism from a unit map, checking that it is a group
    /// homomorphism `F× → F'×`.
    pub fn new(source: Tract, target: Tract, map: Vec<Unit>) -> Result<Self, TractError> {
        let (s, t) = (source.carrier(), target.carrier());
        if map.len() != s.n_units() || map.iter().any(|u| u.index() >= t.n_units()) {
            return Err(TractError::Morphism("map must send every unit to a unit".into()));
        }
        for a in s.units() {
            for b in s.units() {
                if map[s.mul(a, b).index()] != t.mul(map[a.index()], map[b.index()]) {
                    return Err(TractError::Morphism(format!(
                        "not multiplicative at ({}, {})",
                        s.name(a),
                        s.name(b)
                    )));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    /// Builds a morphism from element names, `source name → target name`.
    pub fn from_names(source: Tract, target: Tract, pairs: &[(&str, &str)]) -> Result<Self, TractError> {
        let mut map = vec![None; source.carrier().n_units()];
        for (a, b) in pairs {
            let ua = source
                .carrier()
                .unit_by_name(a)
                .ok_or_else(|| TractError::Morphism(format!("unknown source unit `{a}`")))?;
            let ub = target
                .carrier()
                .unit_by_name(b)
                .ok_or_else(|| TractError::Morphism(format!("unknown target unit `{b}`")))?;
            map[ua.index()] = Some(ub);
        }
        let map = map
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| TractError::Morphism("map is not defined on every unit".into()))?;
        Self::new(source, target, map)
    }

    pub fn source(&self) -> &Tract {
        &self.source
    }

    pub fn target(&self) -> &Tract {
        &self.target
    }

    pub fn apply(&self, u: Unit) -> Unit {
        self.map[u.index()]
    }

    pub fn apply_sum(&self, sum: &FormalSum) -> FormalSum {
        let mut counts = vec![0u32; self.target.carrier().n_units()];
        for (u, c) in sum.to_pairs() {
            counts[self.apply(u).index()] += c;
        }
        FormalSum::from_counts(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign_tract() -> Tract {
        let c = Arc::new(Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap());
        let oracle = FnOracle::new("sign", None, |s: &FormalSum| {
            s.is_empty() || (s.count(Unit(0)) > 0 && s.count(Unit(1)) > 0)
        });
        Tract::new("sign", c, Arc::new(oracle))
    }

    #[test]
    fn sign_nullity_examples() {
        let t = sign_tract();
        let c = t.carrier().clone();
        assert!(t.is_null(&c.parse_terms(&["1", "-1"]).unwrap()).unwrap());
        assert!(!t.is_null(&c.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());
        assert!(t.is_null(&c.empty_sum()).unwrap());
    }

    #[test]
    fn out_of_bound_is_an_error() {
        let c = Arc::new(Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap());
        let t = Tract::new(
            "bounded",
            c.clone(),
            Arc::new(FnOracle::new("b", Some(2), |_: &FormalSum| true)),
        );
        let s = c.parse_terms(&["1", "1", "1"]).unwrap();
        assert_eq!(t.is_null(&s), Err(TractError::OutOfBound { norm: 3, bound: 2 }));
    }

    #[test]
    fn involution_must_have_order_two() {
        let c = Carrier::cyclic((0..4).map(|i| format!("z{i}")).collect(), "0").unwrap();
        // z ↦ z^3 on C4 is an involution; z ↦ z^2 is not bijective.
        assert!(Involution::new(&c, vec![Unit(0), Unit(3), Unit(2), Unit(1)]).is_ok());
        assert!(Involution::new(&c, vec![Unit(0), Unit(2), Unit(0), Unit(2)]).is_err());
    }

    #[test]
    fn morphism_must_be_multiplicative() {
        let t = sign_tract();
        assert!(Morphism::new(t.clone(), t.clone(), vec![Unit(0), Unit(1)]).is_ok());
        assert!(Morphism::new(t.clone(), t.clone(), vec![Unit(1), Unit(1)]).is_err());
    }
}
