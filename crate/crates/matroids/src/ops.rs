//! Minors, series/parallel extensions and the expansion of a (co)vector pair.

use std::collections::BTreeMap;

use tractlab_core::Unit;

use crate::matroid::{minimal_sets, squeeze, Matroid};
use crate::signature::FMatroid;
use crate::vector::{FVector, GenVector};
use crate::MatroidError;

fn drop_coord(v: &FVector, i: usize) -> FVector {
    let mut e = v.entries().to_vec();
    e.remove(i);
    FVector::new(e)
}

/// Representatives of the minimal nonzero restrictions, one per support.
fn minimal_restrictions(vs: &[FVector], i: usize) -> Vec<FVector> {
    let restricted: Vec<FVector> = vs.iter().map(|v| drop_coord(v, i)).filter(|v| !v.is_zero()).collect();
    let keep = minimal_sets(restricted.iter().map(FVector::support));
    restricted.into_iter().filter(|v| keep.contains(&v.support())).collect()
}

fn vanishing_at(vs: &[FVector], i: usize) -> Vec<FVector> {
    vs.iter()
        .filter(|v| v.get(i).is_none())
        .map(|v| drop_coord(v, i))
        .collect()
}

/// `M \ e`: circuits avoiding `e`; cocircuits are minimal nonzero restrictions.
pub fn delete(fm: &FMatroid, label: &str) -> Result<FMatroid, MatroidError> {
    let i = fm.matroid().index_of(label)?;
    FMatroid::from_parts(
        fm.tract().clone(),
        fm.matroid().delete(label)?,
        vanishing_at(fm.circuits().vectors(), i),
        minimal_restrictions(fm.cocircuits().vectors(), i),
    )
}

/// `M / e`: circuits are minimal nonzero restrictions; cocircuits avoid `e`.
pub fn contract(fm: &FMatroid, label: &str) -> Result<FMatroid, MatroidError> {
    let i = fm.matroid().index_of(label)?;
    FMatroid::from_parts(
        fm.tract().clone(),
        fm.matroid().contract(label)?,
        minimal_restrictions(fm.circuits().vectors(), i),
        vanishing_at(fm.cocircuits().vectors(), i),
    )
}

/// Labels of the two elements replacing `label`.
pub fn fresh_labels(fm: &FMatroid, label: &str) -> Result<(String, String), MatroidError> {
    let (a, b) = (format!("{label}a"), format!("{label}b"));
    for l in [&a, &b] {
        if fm.labels().iter().any(|x| x == l) {
            return Err(MatroidError::Ground(format!("fresh label {l} already in use")));
        }
    }
    Ok((a, b))
}

/// Moves coordinate `i` to the end and appends one more coordinate.
fn reshape(v: &FVector, i: usize, first: Option<Unit>, second: Option<Unit>) -> FVector {
    let mut e = v.entries().to_vec();
    e.remove(i);
    e.push(first);
    e.push(second);
    FVector::new(e)
}

/// Replaces `e` by two elements in series, appended as `e·"a"`, `e·"b"`.
///
/// Circuits copy `C(e)` onto both new elements. Cocircuits put `D(e)` on one
/// of them, plus the family `(1, -1)` on the pair. When `e` is a coloop the
/// pair is no longer a cocircuit (both new elements are coloops), so that
/// family is left out.
pub fn series_extend(fm: &FMatroid, label: &str) -> Result<FMatroid, MatroidError> {
    let m = fm.matroid();
    let i = m.index_of(label)?;
    let (a, b) = fresh_labels(fm, label)?;
    let n = m.len();
    let mut labels: Vec<String> = m.labels().to_vec();
    labels.remove(i);
    labels.push(a);
    labels.push(b);
    let pair = 0b11u64 << (n - 1);

    let circuit_masks = m
        .circuits()
        .iter()
        .map(|&c| {
            if c >> i & 1 == 1 {
                squeeze(c, i) | pair
            } else {
                squeeze(c, i)
            }
        })
        .collect();
    let matroid = Matroid::from_masks(labels, circuit_masks)?;

    let circuits = fm
        .circuits()
        .vectors()
        .iter()
        .map(|v| reshape(v, i, v.get(i), v.get(i)))
        .collect();
    let mut cocircuits = Vec::new();
    for d in fm.cocircuits().vectors() {
        match d.get(i) {
            None => cocircuits.push(reshape(d, i, None, None)),
            Some(x) => {
                cocircuits.push(reshape(d, i, None, Some(x)));
                cocircuits.push(reshape(d, i, Some(x), None));
            }
        }
    }
    if !m.is_coloop(i) {
        let c = fm.carrier();
        let mut e = vec![None; n - 1];
        e.push(Some(c.one()));
        e.push(Some(c.epsilon()));
        cocircuits.push(FVector::new(e));
    }
    FMatroid::from_parts(fm.tract().clone(), matroid, circuits, cocircuits)
}

/// Replaces `e` by two elements in parallel: the dual construction.
pub fn parallel_extend(fm: &FMatroid, label: &str) -> Result<FMatroid, MatroidError> {
    Ok(series_extend(&fm.dual(), label)?.dual())
}

/// `M′` with its single-valued expansions of a (co)vector pair.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub fmatroid: FMatroid,
    pub x: FVector,
    pub y: FVector,
    /// For each original element: series copies, each a bundle of parallel labels.
    pub layout: BTreeMap<String, Vec<Vec<String>>>,
}

/// Replaces every `e` by `max(1, ‖Y(e)‖)` series copies of a bundle of
/// `max(1, ‖X(e)‖)` parallel elements. `X′` puts the `i`-th term of `X(e)` on
/// the `i`-th element of every bundle; `Y′` puts the `j`-th term of `Y(e)` on
/// every element of the `j`-th series copy.
pub fn expand_matroid(fm: &FMatroid, x: &GenVector, y: &GenVector) -> Result<Expansion, MatroidError> {
    for v in [x, y] {
        if v.len() != fm.len() {
            return Err(MatroidError::LengthMismatch {
                expected: fm.len(),
                got: v.len(),
            });
        }
    }
    let original: Vec<String> = fm.labels().to_vec();
    let mut cur = fm.clone();
    let mut layout = BTreeMap::new();
    for (idx, e) in original.iter().enumerate() {
        let series = (y.get(idx).norm() as usize).max(1);
        let parallel = (x.get(idx).norm() as usize).max(1);
        let mut copies = vec![e.clone()];
        while copies.len() < series {
            let last = copies.pop().expect("nonempty");
            cur = series_extend(&cur, &last)?;
            copies.push(format!("{last}a"));
            copies.push(format!("{last}b"));
        }
        let mut bundles = Vec::new();
        for s in copies {
            let mut bundle = vec![s];
            while bundle.len() < parallel {
                let last = bundle.pop().expect("nonempty");
                cur = parallel_extend(&cur, &last)?;
                bundle.push(format!("{last}a"));
                bundle.push(format!("{last}b"));
            }
            bundles.push(bundle);
        }
        layout.insert(e.clone(), bundles);
    }

    let n = cur.len();
    let mut xs = vec![None; n];
    let mut ys = vec![None; n];
    for (idx, e) in original.iter().enumerate() {
        let a_terms = x.get(idx).terms();
        let b_terms = y.get(idx).terms();
        for (j, bundle) in layout[e].iter().enumerate() {
            for (i, l) in bundle.iter().enumerate() {
                let pos = cur.matroid().index_of(l)?;
                xs[pos] = a_terms.get(i).copied();
                ys[pos] = b_terms.get(j).copied();
            }
        }
    }
    Ok(Expansion {
        fmatroid: cur,
        x: FVector::new(xs),
        y: FVector::new(ys),
        layout,
    })
}

/// Circuit supports containing `e` and contained in `mask`.
pub fn circuits_through(m: &Matroid, e: usize, mask: u64) -> impl Iterator<Item = u64> + '_ {
    m.circuits()
        .iter()
        .copied()
        .filter(move |&c| c >> e & 1 == 1 && c & mask == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::check_dual_pair;
    use tractlab_core::hyperfield;

    fn u12_sign() -> FMatroid {
        let s = hyperfield::tract_of(&hyperfield::sign());
        FMatroid::new(
            s,
            Matroid::uniform(1, 2).unwrap(),
            vec![FVector::new(vec![Some(Unit(0)), Some(Unit(1))])],
            vec![FVector::new(vec![Some(Unit(0)), Some(Unit(0))])],
        )
        .unwrap()
    }

    #[test]
    fn series_extension_of_u12() {
        let fm = series_extend(&u12_sign(), "1").unwrap();
        assert_eq!(fm.labels(), &["2", "1a", "1b"]);
        assert!(check_dual_pair(&fm).unwrap().holds);
        let new_family = FVector::new(vec![None, Some(Unit(0)), Some(Unit(1))]);
        assert!(fm.cocircuits().vectors().contains(&new_family));
        let c = &fm.circuits().vectors()[0];
        assert_eq!(c.get(1), c.get(2));
    }

    #[test]
    fn parallel_extension_is_dual() {
        let fm = parallel_extend(&u12_sign(), "2").unwrap();
        assert!(check_dual_pair(&fm).unwrap().holds);
        let d = &fm.cocircuits().vectors()[0];
        assert_eq!(d.get(1), d.get(2));
        assert_eq!(fm.circuits().vectors().len(), 3);
    }

    #[test]
    fn minors_of_u12() {
        let fm = u12_sign();
        let del = delete(&fm, "1").unwrap();
        assert!(del.circuits().vectors().is_empty());
        assert_eq!(del.cocircuits().vectors().len(), 1);
        assert!(check_dual_pair(&del).unwrap().holds);
        let con = contract(&fm, "1").unwrap();
        assert!(con.matroid().is_loop(0));
        assert!(check_dual_pair(&con).unwrap().holds);
    }

    #[test]
    fn trivial_expansion_is_identity() {
        let fm = u12_sign();
        let c = fm.carrier().clone();
        let x = GenVector::new(vec![c.singleton(Unit(0)), c.singleton(Unit(0))]);
        let y = GenVector::new(vec![c.singleton(Unit(0)), c.singleton(Unit(1))]);
        let ex = expand_matroid(&fm, &x, &y).unwrap();
        assert_eq!(ex.fmatroid.labels(), fm.labels());
        assert_eq!(ex.x.to_gen(&c), x);
        assert_eq!(ex.y.to_gen(&c), y);
    }
}
