//! Bounded exhaustive checks over generalized vectors and covectors.

use rayon::prelude::*;
use serde_json::{json, Value};
use tractlab_core::{Axiom, AxiomReport, Carrier, FormalSum, Tract, Witness};

use crate::enumerate::{gen_covectors, gen_vectors, is_gen_covector, is_gen_vector};
use crate::ops::{circuits_through, contract, delete};
use crate::signature::{check_dual_pair, FMatroid};
use crate::vector::{inner_product, inner_product_f, null_or_bound, wedge, GenVector};
use crate::MatroidError;

fn pair_text(c: &Carrier, x: &GenVector, y: &GenVector) -> String {
    format!("{} · {}", x.display(c), y.display(c))
}

fn vector_witness(c: &Carrier, w: Witness, name: &str, v: &GenVector) -> Witness {
    w.vector(name, v.entries().to_vec())
        .text(&format!("{name}_text"), v.display(c))
}

/// Per outer item: checks made, checks in scope, and the first failure.
type ItemOutcome = Result<(u64, u64, Option<Witness>), MatroidError>;

/// Runs `f` over `items` in parallel and reports the first failure in
/// `(outer, inner)` order, with counters summed up to and including it.
fn first_failure<T, F>(items: &[T], f: F) -> Result<(u64, u64, Option<Witness>), MatroidError>
where
    T: Sync,
    F: Fn(&T) -> ItemOutcome + Sync,
{
    let results: Vec<ItemOutcome> = items.par_iter().map(&f).collect();
    let (mut checks, mut scoped) = (0u64, 0u64);
    for r in results {
        let (n, k, w) = r?;
        checks += n;
        scoped += k;
        if w.is_some() {
            return Ok((checks, scoped, w));
        }
    }
    Ok((checks, scoped, None))
}

/// Every `X ∧_e Y` of generalized covectors is again a generalized covector.
pub fn check_wedge_closure(fm: &FMatroid, coord_bound: u32) -> Result<AxiomReport, MatroidError> {
    let covs = gen_covectors(fm, coord_bound)?;
    let t = fm.tract();
    let c = fm.carrier();
    let (checks, _, failure) = first_failure(&covs, |x| {
        let mut n = 0u64;
        for y in &covs {
            for e in 0..fm.len() {
                let z = wedge(t, x, y, e)?;
                for circ in fm.circuits().vectors() {
                    n += 1;
                    let p = inner_product_f(t, &z, circ)?;
                    if !null_or_bound(t, &p, || format!("{} · {}", z.display(c), circ.display(c)))? {
                        let w = vector_witness(c, Witness::new(), "x", x);
                        let w = vector_witness(c, w, "y", y);
                        let w = vector_witness(c, w, "wedge", &z)
                            .text("e", fm.labels()[e].clone())
                            .text("circuit", circ.display(c))
                            .sum("product", p);
                        return Ok((n, 0, Some(w)));
                    }
                }
            }
        }
        Ok((n, 0, None))
    })?;
    Ok(AxiomReport::from_witness(Axiom::WedgeClosure, coord_bound, failure)
        .detail("covectors", covs.len())
        .detail("checks", checks))
}

/// Restrictions of generalized (co)vectors into the minors at each element.
pub fn check_minor_props(fm: &FMatroid, coord_bound: u32) -> Result<AxiomReport, MatroidError> {
    let vecs = gen_vectors(fm, coord_bound)?;
    let covs = gen_covectors(fm, coord_bound)?;
    let c = fm.carrier();
    let mut checks = 0u64;
    for (i, label) in fm.labels().iter().enumerate() {
        let del = delete(fm, label)?;
        let con = contract(fm, label)?;
        for (name, minor) in [("deletion", &del), ("contraction", &con)] {
            let dp = check_dual_pair(minor)?;
            if !dp.holds {
                let w = Witness::new()
                    .text("e", label.clone())
                    .text("minor", name)
                    .text("dual_pair", dp.to_text(c));
                return Ok(AxiomReport::fail(Axiom::MinorProps, coord_bound, w));
            }
        }
        let cases: [(&str, &[GenVector], &FMatroid, bool, bool); 4] = [
            (
                "covector vanishing at e restricts into the contraction",
                &covs,
                &con,
                true,
                true,
            ),
            (
                "vector vanishing at e restricts into the deletion",
                &vecs,
                &del,
                false,
                true,
            ),
            ("covector restricts into the deletion", &covs, &del, true, false),
            ("vector restricts into the contraction", &vecs, &con, false, false),
        ];
        for (claim, family, minor, co, vanishing) in cases {
            for v in family {
                if vanishing && !v.get(i).is_empty() {
                    continue;
                }
                checks += 1;
                let r = v.remove(i);
                let ok = if co {
                    is_gen_covector(minor, &r)?
                } else {
                    is_gen_vector(minor, &r)?
                };
                if !ok {
                    let w = vector_witness(c, Witness::new(), "vector", v)
                        .text("e", label.clone())
                        .text("claim", claim);
                    return Ok(AxiomReport::fail(Axiom::MinorProps, coord_bound, w).detail("checks", checks));
                }
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::MinorProps, coord_bound)
        .detail("vectors", vecs.len())
        .detail("covectors", covs.len())
        .detail("checks", checks))
}

/// A generalized vector with `X(e)` not null has a circuit through `e`
/// inside its support.
pub fn check_supp_lemma(fm: &FMatroid, coord_bound: u32) -> Result<AxiomReport, MatroidError> {
    let vecs = gen_vectors(fm, coord_bound)?;
    let t = fm.tract();
    let c = fm.carrier();
    let mut checks = 0u64;
    for x in &vecs {
        let supp = x.support();
        for e in 0..fm.len() {
            if null_or_bound(t, x.get(e), || x.display(c))? {
                continue;
            }
            checks += 1;
            if circuits_through(fm.matroid(), e, supp).next().is_none() {
                let w = vector_witness(c, Witness::new(), "vector", x).text("e", fm.labels()[e].clone());
                return Ok(AxiomReport::fail(Axiom::SuppLemma, coord_bound, w).detail("checks", checks));
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::SuppLemma, coord_bound)
        .detail("vectors", vecs.len())
        .detail("checks", checks))
}

struct PairScan {
    vectors: usize,
    covectors: usize,
    pairs: u64,
    in_scope: u64,
    failure: Option<Witness>,
    oracle_bound: u32,
}

/// Orthogonality of vector/covector pairs whose inner product passes `filter`.
fn scan_pairs(
    fm: &FMatroid,
    coord_bound: u32,
    filter: impl Fn(&FormalSum) -> bool + Sync,
) -> Result<PairScan, MatroidError> {
    let vecs = gen_vectors(fm, coord_bound)?;
    let covs = gen_covectors(fm, coord_bound)?;
    let t: &Tract = fm.tract();
    let c = fm.carrier();
    let (checked, in_scope, failure) = first_failure(&vecs, |x| {
        let mut n = 0u64;
        let mut scoped = 0u64;
        for y in &covs {
            n += 1;
            let p = inner_product(t, x, y)?;
            if !filter(&p) {
                continue;
            }
            scoped += 1;
            if !null_or_bound(t, &p, || pair_text(c, x, y))? {
                let w = vector_witness(c, Witness::new(), "x", x);
                let w = vector_witness(c, w, "y", y).sum("product", p);
                return Ok((n, scoped, Some(w)));
            }
        }
        Ok((n, scoped, None))
    })?;
    let max_norm = fm.len() as u32 * coord_bound * coord_bound;
    Ok(PairScan {
        vectors: vecs.len(),
        covectors: covs.len(),
        pairs: checked,
        in_scope,
        failure,
        oracle_bound: t.valid_norm_bound().map_or(max_norm, |b| b.min(max_norm)),
    })
}

/// Pairs with `‖X·Y‖ ≤ 3` are orthogonal.
pub fn check_lower_term(fm: &FMatroid, coord_bound: u32) -> Result<AxiomReport, MatroidError> {
    let scan = scan_pairs(fm, coord_bound, |p| p.norm() <= 3)?;
    Ok(AxiomReport::from_witness(Axiom::LowerTerm, coord_bound, scan.failure)
        .detail("vectors", scan.vectors)
        .detail("covectors", scan.covectors)
        .detail("pairs_in_scope", scan.in_scope))
}

fn certify(fm: &FMatroid, coord_bound: u32, claim: Axiom) -> Result<AxiomReport, MatroidError> {
    let scan = scan_pairs(fm, coord_bound, |_| true)?;
    Ok(AxiomReport::from_witness(claim, coord_bound, scan.failure)
        .detail("vectors", scan.vectors)
        .detail("covectors", scan.covectors)
        .detail("pairs_checked", scan.pairs)
        .detail("oracle_bound", scan.oracle_bound))
}

/// Every generalized vector is orthogonal to every generalized covector, up
/// to the coordinate bound.
pub fn certify_strong_perfection(fm: &FMatroid, coord_bound: u32) -> Result<AxiomReport, MatroidError> {
    certify(fm, coord_bound, Axiom::StrongPerfection)
}

/// Vectors are orthogonal to covectors.
pub fn certify_perfection(fm: &FMatroid) -> Result<AxiomReport, MatroidError> {
    certify(fm, 1, Axiom::Perfection)
}

/// Replayable certificate for a perfection report.
pub fn certificate_json(report: &AxiomReport, carrier: &Carrier) -> Value {
    json!({
        "claim": report.axiom,
        "coord_bound": report.bound_checked,
        "oracle_bound": report.details.get("oracle_bound").cloned().unwrap_or(Value::Null),
        "pairs_checked": report.details.get("pairs_checked").cloned().unwrap_or(Value::Null),
        "vectors": report.details.get("vectors").cloned().unwrap_or(Value::Null),
        "covectors": report.details.get("covectors").cloned().unwrap_or(Value::Null),
        "verdict": if report.holds { "certified" } else { "violated" },
        "witness": report.witness.as_ref().map(|w| w.to_json(carrier)),
    })
}
