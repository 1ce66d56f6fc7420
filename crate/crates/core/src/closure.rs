//! Null-set closures: the fusion closure of a pasture, the σ-closure of a
//! tract, three-term truncation and the "null above norm three" extension.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::axioms::{CheckError, Scan};
use crate::carrier::Carrier;
use crate::formal_sum::FormalSum;
use crate::pasture::Pasture;
use crate::report::{Axiom, AxiomReport, Witness};
use crate::space::SumSpace;
use crate::tract::{NullOracle, Tract};

/// A null set stored explicitly as membership flags over a [`SumSpace`].
pub struct ExplicitOracle {
    label: String,
    space: Arc<SumSpace>,
    member: Vec<bool>,
    rounds: usize,
}

impl ExplicitOracle {
    pub fn space(&self) -> &SumSpace {
        &self.space
    }

    pub fn members(&self) -> impl Iterator<Item = &FormalSum> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.space.sum(i))
    }

    pub fn member_count(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }

    /// Saturation rounds (or σ-stages) until the fixed point was reached.
    pub fn rounds(&self) -> usize {
        self.rounds
    }
}

impl NullOracle for ExplicitOracle {
    fn contains(&self, sum: &FormalSum) -> bool {
        self.space.index_of(sum).is_some_and(|i| self.member[i])
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        Some(self.space.max_norm())
    }

    fn describe(&self) -> String {
        self.label.clone()
    }
}

/// Index of the `(norm, lex)`-least member of each unit orbit.
fn orbit_reps(space: &SumSpace, carrier: &Carrier) -> Vec<usize> {
    (0..space.len())
        .into_par_iter()
        .map(|i| carrier.units().map(|u| space.scale(carrier, u, i)).min().unwrap_or(i))
        .collect()
}

fn insert_orbit(space: &SumSpace, carrier: &Carrier, member: &mut [bool], i: usize) -> bool {
    let mut changed = false;
    for u in carrier.units() {
        let j = space.scale(carrier, u, i);
        if !member[j] {
            member[j] = true;
            changed = true;
        }
    }
    changed
}

/// Smallest null set containing the pasture's relations and closed under
/// (F), computed up to `bound` by saturation.
pub fn fusion_closure(p: &Pasture, bound: u32) -> Result<ExplicitOracle, CheckError> {
    if bound < 3 {
        return Err(CheckError::BoundTooSmall { got: bound, min: 3 });
    }
    let c = p.carrier().as_ref();
    let space = SumSpace::new(c, bound)?;
    let rep = orbit_reps(&space, c);
    let mut member = vec![false; space.len()];
    for s in p.members() {
        member[space.index_of(s).expect("pasture sums have norm at most 3")] = true;
    }
    let singles: Vec<(usize, usize)> = c
        .units()
        .map(|u| {
            (
                space.unit(u).expect("norm one"),
                space.unit(c.neg(u)).expect("norm one"),
            )
        })
        .collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let all: Vec<usize> = (0..space.len()).filter(|&i| member[i]).collect();
        let firsts: Vec<usize> = all.iter().copied().filter(|&i| rep[i] == i).collect();
        let found: BTreeSet<usize> = firsts
            .par_iter()
            .flat_map_iter(|&s1| {
                let mut out = Vec::new();
                for &s2 in &all {
                    // z = 0: α = s1, β = s2.
                    if let Some(k) = space.add(s1, s2) {
                        if !member[k] {
                            out.push(k);
                        }
                    }
                    // z a unit: α = s1 - z, β = s2 + z with s2 ∋ -z.
                    for &(z, neg_z) in &singles {
                        if let (Some(a), Some(b)) = (space.sub(s1, z), space.sub(s2, neg_z)) {
                            if let Some(k) = space.add(a, b) {
                                if !member[k] {
                                    out.push(k);
                                }
                            }
                        }
                    }
                }
                out
            })
            .collect();
        let mut changed = false;
        for k in found {
            changed |= insert_orbit(&space, c, &mut member, k);
        }
        if !changed {
            break;
        }
    }
    Ok(ExplicitOracle {
        label: format!("fusion closure of {} up to norm {bound}", p.name()),
        space: Arc::new(space),
        member,
        rounds,
    })
}

/// The fusion closure wrapped as a tract.
pub fn fusion_closure_tract(p: &Pasture, bound: u32) -> Result<Tract, CheckError> {
    let oracle = fusion_closure(p, bound)?;
    Ok(Tract::new(
        format!("closure({})", p.name()),
        p.carrier().clone(),
        Arc::new(oracle),
    ))
}

/// The σ-closure up to `bound`.
///
/// Stages are cumulative: stage `k` keeps stage `k-1` and adds every `α + β`
/// with `4 ≤ ‖α + β‖ ≤ bound` such that `α + γ` and `β - γ` lie in stage
/// `k-1` for `γ = 0` or `γ` outside stage `k-1`. Iterates until stable.
pub fn sigma_closure(t: &Tract, bound: u32) -> Result<ExplicitOracle, CheckError> {
    if bound < 4 {
        return Err(CheckError::BoundTooSmall { got: bound, min: 4 });
    }
    let c = t.carrier().as_ref();
    let Scan { space, null } = Scan::new(t, bound)?;
    let rep = orbit_reps(&space, c);
    let mut member = null;
    let orbit_closed = (0..space.len()).all(|i| member[i] == member[rep[i]]);
    let mut rounds = 1;
    loop {
        let prev = member.clone();
        let gammas: Vec<usize> = space
            .up_to(bound - 2)
            .filter(|&g| g == 0 || (!prev[g] && (!orbit_closed || rep[g] == g)))
            .collect();
        let found: BTreeSet<usize> = gammas
            .par_iter()
            .flat_map_iter(|&g| {
                let cap = bound - space.norm(g);
                let ng = space.neg(g);
                let in_prev = |a: usize, s: usize| space.add(a, s).is_some_and(|k| prev[k]);
                let alphas: Vec<usize> = space.up_to(cap).filter(|&a| in_prev(a, g)).collect();
                let betas: Vec<usize> = space.up_to(cap).filter(|&b| in_prev(b, ng)).collect();
                let mut out = Vec::new();
                for &a in &alphas {
                    for &b in &betas {
                        if let Some(k) = space.add(a, b) {
                            if space.norm(k) >= 4 && !prev[k] {
                                out.push(k);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        let mut changed = false;
        for k in found {
            if orbit_closed {
                changed |= insert_orbit(&space, c, &mut member, k);
            } else if !member[k] {
                member[k] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        rounds += 1;
    }
    Ok(ExplicitOracle {
        label: format!("sigma closure of {} up to norm {bound}", t.name()),
        space: Arc::new(space),
        member,
        rounds,
    })
}

pub fn sigma_closure_tract(t: &Tract, bound: u32) -> Result<Tract, CheckError> {
    let oracle = sigma_closure(t, bound)?;
    Ok(Tract::new(
        format!("sigma({})", t.name()),
        t.carrier().clone(),
        Arc::new(oracle),
    ))
}

/// The pasture of all null sums of norm `≤ 3`.
pub fn truncate3(t: &Tract) -> Result<Pasture, CheckError> {
    let scan = Scan::new(t, 3)?;
    let sums = (0..scan.space.len())
        .filter(|&i| scan.null[i])
        .map(|i| scan.space.sum(i).clone());
    Pasture::new(format!("trunc3({})", t.name()), t.carrier().clone(), sums)
        .map_err(|e| CheckError::Tract(crate::tract::TractError::Invalid(e.to_string())))
}

/// Keeps a base oracle on norms `≤ 3` and declares every sum of norm `≥ 4` null.
pub struct NullAboveThree {
    base: Arc<dyn NullOracle>,
}

impl NullAboveThree {
    pub fn new(base: Arc<dyn NullOracle>) -> Self {
        Self { base }
    }
}

impl NullOracle for NullAboveThree {
    fn contains(&self, sum: &FormalSum) -> bool {
        sum.norm() >= 4 || self.base.contains(sum)
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        match self.base.valid_norm_bound() {
            Some(b) if b < 3 => Some(b),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        format!("{} extended by all sums of norm >= 4", self.base.describe())
    }
}

/// The tract over a pasture's carrier that is null on the pasture's
/// relations and on every sum of norm at least 4.
pub fn weak_extension(p: &Pasture) -> Tract {
    Tract::new(
        format!("weak({})", p.name()),
        p.carrier().clone(),
        Arc::new(NullAboveThree::new(Arc::new(p.clone()))),
    )
}

/// Compares two null sets over the same carrier on every sum of norm
/// `≤ bound`. Holds when they agree; otherwise the least disagreement is
/// the witness.
pub fn compare_null_sets(axiom: Axiom, first: &Tract, second: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let a = Scan::new(first, bound)?;
    second.require_bound(bound)?;
    let sp = &a.space;
    let b: Vec<bool> = sp.sums().par_iter().map(|s| second.oracle().contains(s)).collect();
    let only_first = (0..sp.len()).filter(|&i| a.null[i] && !b[i]).count();
    let only_second = (0..sp.len()).filter(|&i| !a.null[i] && b[i]).count();
    let w = (0..sp.len()).find(|&i| a.null[i] != b[i]).map(|i| {
        Witness::new()
            .sum("alpha", sp.sum(i).clone())
            .text(&format!("in_{}", first.name()), a.null[i].to_string())
            .text(&format!("in_{}", second.name()), b[i].to_string())
    });
    Ok(AxiomReport::from_witness(axiom, bound, w)
        .detail("sums_compared", sp.len())
        .detail("only_first", only_first)
        .detail("only_second", only_second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_msf;
    use crate::formal_sum::Unit;
    use crate::tract::FnOracle;

    fn sign() -> Tract {
        let c = Arc::new(Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap());
        Tract::new(
            "S",
            c,
            Arc::new(FnOracle::new("sign", None, |s: &FormalSum| {
                s.is_empty() || (s.count(Unit(0)) > 0 && s.count(Unit(1)) > 0)
            })),
        )
    }

    #[test]
    fn truncation_of_sign() {
        let t = sign();
        let p = truncate3(&t).unwrap();
        let c = t.carrier();
        let reps: Vec<_> = p.orbit_reps().iter().cloned().collect();
        assert_eq!(
            reps,
            vec![
                c.empty_sum(),
                c.parse_terms(&["1", "-1"]).unwrap(),
                c.parse_terms(&["1", "1", "-1"]).unwrap()
            ]
        );
    }

    #[test]
    fn closure_of_sign_pasture() {
        let t = sign();
        let c = t.carrier().clone();
        let closed = fusion_closure(&truncate3(&t).unwrap(), 6).unwrap();
        assert!(closed.contains(&c.parse_terms(&["1", "1", "-1", "-1"]).unwrap()));
        assert!(!closed.contains(&c.parse_terms(&["1", "1", "1", "1"]).unwrap()));
        assert!(closed.contains(&c.empty_sum()));
    }

    #[test]
    fn sigma_fixes_sign_and_passes_msf() {
        let t = sign();
        let sig = sigma_closure_tract(&t, 6).unwrap();
        let cmp = compare_null_sets(Axiom::SigmaFixedPoint, &t, &sig, 6).unwrap();
        assert!(cmp.holds, "{cmp:?}");
        assert!(check_msf(&sig, 6).unwrap().holds);
    }

    #[test]
    fn weak_extension_is_null_above_three() {
        let t = sign();
        let w = weak_extension(&truncate3(&t).unwrap());
        let c = t.carrier();
        assert!(w.is_null(&c.parse_terms(&["1", "1", "1", "1"]).unwrap()).unwrap());
        assert!(!w.is_null(&c.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());
        assert_eq!(w.valid_norm_bound(), None);
    }
}
