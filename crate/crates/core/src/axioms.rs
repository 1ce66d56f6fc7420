//! Bounded exhaustive checkers for the tract axioms and the fusion-type axioms.
//!
//! Every checker scans all formal sums up to a norm bound. When an axiom fails,
//! the reported witness is the least violation in a fixed order: first the
//! norm of the concluded sum, then the shared term (`z` or `γ`), then `α`,
//! then `β`, each compared in `(norm, lex)` order.

use rayon::prelude::*;
use thiserror::Error;

use crate::formal_sum::Unit;
use crate::report::{Axiom, AxiomReport, Witness};
use crate::space::{null_table, SpaceError, SumSpace};
use crate::tract::{Morphism, Tract, TractError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Tract(#[from] TractError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("bound {got} is below the minimum {min} for this check")]
    BoundTooSmall { got: u32, min: u32 },
}

/// All sums up to a bound together with their nullity.
pub struct Scan {
    pub space: SumSpace,
    pub null: Vec<bool>,
}

impl Scan {
    pub fn new(t: &Tract, bound: u32) -> Result<Self, CheckError> {
        t.require_bound(bound)?;
        let space = SumSpace::new(t.carrier(), bound)?;
        let null = null_table(t, &space)?;
        Ok(Self { space, null })
    }

    #[inline]
    pub fn is_null(&self, i: usize) -> bool {
        self.null[i]
    }

    /// Nullity of `sums[i] + sums[j]`; `None` when out of range.
    #[inline]
    pub fn sum_null(&self, i: usize, j: usize) -> Option<bool> {
        self.space.add(i, j).map(|k| self.null[k])
    }
}

pub fn check_tract_axioms(t: &Tract, bound: u32) -> Result<Vec<AxiomReport>, CheckError> {
    let scan = Scan::new(t, bound)?;
    Ok(vec![t1(t, &scan), t2(t, &scan)?, t3(t, &scan)])
}

fn t1(_t: &Tract, scan: &Scan) -> AxiomReport {
    let bound = scan.space.max_norm();
    if scan.is_null(0) {
        AxiomReport::pass(Axiom::T1, bound)
    } else {
        AxiomReport::fail(Axiom::T1, bound, Witness::new().sum("alpha", scan.space.sum(0).clone()))
    }
}

fn t2(t: &Tract, scan: &Scan) -> Result<AxiomReport, CheckError> {
    let bound = scan.space.max_norm();
    if bound < 2 {
        return Err(CheckError::BoundTooSmall { got: bound, min: 2 });
    }
    let c = t.carrier();
    let one = scan.space.unit(c.one()).expect("norm one in range");
    let null_units: Vec<Unit> = c
        .units()
        .filter(|&u| scan.sum_null(one, scan.space.unit(u).expect("in range")) == Some(true))
        .collect();
    let report = if null_units == [c.epsilon()] {
        AxiomReport::pass(Axiom::T2, bound)
    } else {
        let names: Vec<&str> = null_units.iter().map(|&u| c.name(u)).collect();
        let offender = null_units
            .iter()
            .copied()
            .find(|&u| u != c.epsilon())
            .unwrap_or(c.epsilon());
        let w = Witness::new()
            .element("u", Some(offender))
            .sum("one_plus_u", c.sum_of(&[Some(c.one()), Some(offender)]))
            .text("null_units", format!("[{}]", names.join(", ")));
        AxiomReport::fail(Axiom::T2, bound, w)
    };
    Ok(report.detail("null_units", null_units.len()))
}

fn t3(t: &Tract, scan: &Scan) -> AxiomReport {
    let c = t.carrier();
    let bound = scan.space.max_norm();
    let hit = (0..scan.space.len()).into_par_iter().find_map_first(|i| {
        c.units()
            .find(|&u| scan.null[scan.space.scale(c, u, i)] != scan.null[i])
            .map(|u| (i, u))
    });
    let w = hit.map(|(i, u)| {
        Witness::new()
            .sum("alpha", scan.space.sum(i).clone())
            .element("u", Some(u))
            .text("alpha_null", scan.null[i].to_string())
    });
    AxiomReport::from_witness(Axiom::T3, bound, w).detail("sums_scanned", scan.space.len())
}

/// (I): `α, β ∈ N ⇒ α + β ∈ N` for `‖α‖ + ‖β‖ ≤ bound`.
pub fn check_idyll(t: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let scan = Scan::new(t, bound)?;
    Ok(idyll_on(&scan))
}

pub fn idyll_on(scan: &Scan) -> AxiomReport {
    let sp = &scan.space;
    let bound = sp.max_norm();
    let nulls: Vec<usize> = (0..sp.len()).filter(|&i| scan.null[i]).collect();
    let (best, count) = nulls
        .par_iter()
        .map(|&a| {
            let mut best: Option<(u32, usize, usize)> = None;
            let mut count = 0u64;
            for &b in &nulls {
                if let Some(k) = sp.add(a, b) {
                    if !scan.null[k] {
                        count += 1;
                        let key = (sp.norm(k), a, b);
                        if best.is_none_or(|x| key < x) {
                            best = Some(key);
                        }
                    }
                }
            }
            (best, count)
        })
        .reduce(|| (None, 0), merge_min);
    let w = best.map(|(_, a, b)| {
        Witness::new()
            .sum("alpha", sp.sum(a).clone())
            .sum("beta", sp.sum(b).clone())
    });
    AxiomReport::from_witness(Axiom::I, bound, w).detail("violations", count)
}

fn merge_min<K: Ord>(x: (Option<K>, u64), y: (Option<K>, u64)) -> (Option<K>, u64) {
    let best = match (x.0, y.0) {
        (Some(a), Some(b)) => Some(if a <= b { a } else { b }),
        (a, b) => a.or(b),
    };
    (best, x.1 + y.1)
}

/// (F): `α + z, β - z ∈ N ⇒ α + β ∈ N` for `z ∈ F` including zero.
pub fn check_fusion(t: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let scan = Scan::new(t, bound)?;
    Ok(fusion_on(t, &scan))
}

pub fn fusion_on(t: &Tract, scan: &Scan) -> AxiomReport {
    let c = t.carrier();
    let sp = &scan.space;
    let bound = sp.max_norm();
    // z = None is zero; otherwise the unit z.
    let zs: Vec<Option<Unit>> = std::iter::once(None).chain(c.units().map(Some)).collect();
    let (best, count) = zs
        .par_iter()
        .enumerate()
        .map(|(zi, &z)| {
            let (plus, minus) = match z {
                None => (None, None),
                Some(u) => {
                    if bound < 1 {
                        return (None, 0);
                    }
                    (sp.unit(u), sp.unit(c.neg(u)))
                }
            };
            let cap = if z.is_some() { bound - 1 } else { bound };
            let side = |shift: Option<usize>| -> Vec<usize> {
                sp.up_to(cap)
                    .filter(|&a| match shift {
                        None => scan.null[a],
                        Some(s) => scan.sum_null(a, s) == Some(true),
                    })
                    .collect()
            };
            let alphas = side(plus);
            let betas = side(minus);
            let mut best: Option<(u32, usize, usize, usize)> = None;
            let mut count = 0u64;
            for &a in &alphas {
                for &b in &betas {
                    if let Some(k) = sp.add(a, b) {
                        if !scan.null[k] {
                            count += 1;
                            let key = (sp.norm(k), zi, a, b);
                            if best.is_none_or(|x| key < x) {
                                best = Some(key);
                            }
                        }
                    }
                }
            }
            (best, count)
        })
        .reduce(|| (None, 0), merge_min);
    let w = best.map(|(_, zi, a, b)| {
        Witness::new()
            .sum("alpha", sp.sum(a).clone())
            .sum("beta", sp.sum(b).clone())
            .element("z", zs[zi])
    });
    AxiomReport::from_witness(Axiom::F, bound, w).detail("violations", count)
}

/// Least `(α, β, γ)` violating strong fusion with `‖α + β‖ ≥ min_fused`,
/// plus the total number of violations.
///
/// `γ` ranges over the empty sum and the non-null sums of norm `≤ bound - 2`;
/// `α`, `β` are restricted so that `α + γ` and `β - γ` stay within the bound.
pub fn strong_fusion_violations(scan: &Scan, min_fused: u32) -> (Option<(usize, usize, usize)>, u64) {
    let sp = &scan.space;
    let bound = sp.max_norm();
    let gammas: Vec<usize> = sp
        .up_to(bound.saturating_sub(2))
        .filter(|&g| g == 0 || !scan.null[g])
        .collect();
    let (best, count) = gammas
        .par_iter()
        .map(|&g| {
            let cap = bound - sp.norm(g);
            let ng = sp.neg(g);
            let alphas: Vec<usize> = sp.up_to(cap).filter(|&a| scan.sum_null(a, g) == Some(true)).collect();
            let betas: Vec<usize> = sp.up_to(cap).filter(|&b| scan.sum_null(b, ng) == Some(true)).collect();
            let mut best: Option<(u32, usize, usize, usize)> = None;
            let mut count = 0u64;
            for &a in &alphas {
                for &b in &betas {
                    if let Some(k) = sp.add(a, b) {
                        let n = sp.norm(k);
                        if n >= min_fused && !scan.null[k] {
                            count += 1;
                            let key = (n, g, a, b);
                            if best.is_none_or(|x| key < x) {
                                best = Some(key);
                            }
                        }
                    }
                }
            }
            (best, count)
        })
        .reduce(|| (None, 0), merge_min);
    (best.map(|(_, g, a, b)| (a, b, g)), count)
}

fn fusion_report(axiom: Axiom, scan: &Scan, min_fused: u32) -> AxiomReport {
    let sp = &scan.space;
    let (best, count) = strong_fusion_violations(scan, min_fused);
    let w = best.map(|(a, b, g)| {
        Witness::new()
            .sum("alpha", sp.sum(a).clone())
            .sum("beta", sp.sum(b).clone())
            .sum("gamma", sp.sum(g).clone())
    });
    AxiomReport::from_witness(axiom, sp.max_norm(), w).detail("violations", count)
}

/// (SF): `α + γ, β - γ ∈ N` with `γ = 0` or `γ ∉ N` implies `α + β ∈ N`.
pub fn check_strong_fusion(t: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let scan = Scan::new(t, bound)?;
    Ok(strong_fusion_on(&scan))
}

pub fn strong_fusion_on(scan: &Scan) -> AxiomReport {
    fusion_report(Axiom::SF, scan, 0)
}

/// (MSF): (SF) restricted to `‖α + β‖ ≥ 4`.
pub fn check_msf(t: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let scan = Scan::new(t, bound)?;
    Ok(msf_on(&scan))
}

pub fn msf_on(scan: &Scan) -> AxiomReport {
    fusion_report(Axiom::MSF, scan, 4)
}

/// Runs a named axiom check. Tract-axiom tags return their single report.
pub fn check_axiom(t: &Tract, axiom: Axiom, bound: u32) -> Result<AxiomReport, CheckError> {
    match axiom {
        Axiom::T1 | Axiom::T2 | Axiom::T3 => {
            let reports = check_tract_axioms(t, bound)?;
            Ok(reports
                .into_iter()
                .find(|r| r.axiom == axiom)
                .expect("all three reported"))
        }
        Axiom::I => check_idyll(t, bound),
        Axiom::F => check_fusion(t, bound),
        Axiom::SF => check_strong_fusion(t, bound),
        Axiom::MSF => check_msf(t, bound),
        Axiom::Involution => check_involution(t, bound),
        other => Err(CheckError::Tract(TractError::Invalid(format!(
            "{other} is not a tract-level axiom"
        )))),
    }
}

/// `φ(N_F) ⊆ N_F'` on every source-null sum of norm `≤ bound`.
pub fn check_morphism(m: &Morphism, bound: u32) -> Result<AxiomReport, CheckError> {
    m.target().require_bound(bound)?;
    let scan = Scan::new(m.source(), bound)?;
    let sp = &scan.space;
    let hit = (0..sp.len()).into_par_iter().find_map_first(|i| {
        if !scan.null[i] {
            return None;
        }
        let image = m.apply_sum(sp.sum(i));
        (!m.target().null_unchecked(&image)).then_some((i, image))
    });
    let w = hit.map(|(i, image)| {
        Witness::new()
            .sum("alpha", sp.sum(i).clone())
            .text("image", m.target().carrier().display_sum(&image))
    });
    Ok(AxiomReport::from_witness(Axiom::Morphism, bound, w))
}

/// The involution maps null sums to null sums.
pub fn check_involution(t: &Tract, bound: u32) -> Result<AxiomReport, CheckError> {
    let scan = Scan::new(t, bound)?;
    let sp = &scan.space;
    let inv = t.involution();
    let hit = (0..sp.len()).into_par_iter().find_map_first(|i| {
        if !scan.null[i] {
            return None;
        }
        let j = sp.index_of(&inv.apply_sum(sp.sum(i))).expect("norm preserved");
        (!scan.null[j]).then_some(i)
    });
    let w = hit.map(|i| Witness::new().sum("alpha", sp.sum(i).clone()));
    Ok(AxiomReport::from_witness(Axiom::Involution, bound, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::formal_sum::FormalSum;
    use crate::tract::FnOracle;
    use std::sync::Arc;

    fn sign_carrier() -> Arc<Carrier> {
        Arc::new(Carrier::cyclic(vec!["1".into(), "-1".into()], "0").unwrap())
    }

    fn sign_like(label: &str, f: impl Fn(&FormalSum) -> bool + Send + Sync + 'static) -> Tract {
        Tract::new(label, sign_carrier(), Arc::new(FnOracle::new(label, None, f)))
    }

    fn sign() -> Tract {
        sign_like("sign", |s| {
            s.is_empty() || (s.count(Unit(0)) > 0 && s.count(Unit(1)) > 0)
        })
    }

    #[test]
    fn sign_passes_everything() {
        let t = sign();
        for r in check_tract_axioms(&t, 5).unwrap() {
            assert!(r.holds, "{r:?}");
        }
        for ax in [Axiom::I, Axiom::F, Axiom::SF, Axiom::MSF] {
            assert!(check_axiom(&t, ax, 6).unwrap().holds, "{ax}");
        }
    }

    #[test]
    fn corrupted_t2_is_caught() {
        // 1+1 and 1+(-1) both null.
        let t = sign_like("corrupt", |s| s.is_empty() || s.norm() >= 2);
        let reports = check_tract_axioms(&t, 3).unwrap();
        let r2 = &reports[1];
        assert!(!r2.holds);
        let w = r2.witness.as_ref().unwrap();
        assert_eq!(w.get_element("u"), Some(Some(Unit(0))));
        assert!(t.is_null(w.get_sum("one_plus_u").unwrap()).unwrap());
    }

    #[test]
    fn corrupted_t3_is_caught() {
        // 1+1 null but (-1)+(-1) not.
        let t = sign_like("skewed", |s| {
            s.is_empty() || (s.count(Unit(0)) > 0 && s.count(Unit(1)) > 0) || s.count(Unit(0)) == 2
        });
        let r = &check_tract_axioms(&t, 3).unwrap()[2];
        assert!(!r.holds);
        let w = r.witness.as_ref().unwrap();
        let alpha = w.get_sum("alpha").unwrap();
        let u = w.get_element("u").unwrap().unwrap();
        assert_ne!(
            t.is_null(alpha).unwrap(),
            t.is_null(&t.carrier().scale(u, alpha)).unwrap()
        );
    }

    #[test]
    fn non_idyll_is_caught() {
        // Only norm-2 balanced sums are null: (1 + -1) + (1 + -1) is not.
        let t = sign_like("pairs", |s| s.is_empty() || (s.norm() == 2 && s.count(Unit(0)) == 1));
        let r = check_idyll(&t, 4).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        let a = w.get_sum("alpha").unwrap();
        let b = w.get_sum("beta").unwrap();
        assert!(t.is_null(a).unwrap() && t.is_null(b).unwrap());
        assert!(!t.is_null(&(a + b)).unwrap());
    }

    #[test]
    fn bound_beyond_oracle_is_an_error() {
        let c = sign_carrier();
        let t = Tract::new("b", c, Arc::new(FnOracle::new("b", Some(3), |_: &FormalSum| true)));
        assert!(matches!(
            check_fusion(&t, 4),
            Err(CheckError::Tract(TractError::OutOfBound { .. }))
        ));
    }
}
