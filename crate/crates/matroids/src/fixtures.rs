//! Canonical signings found by exhaustive search, and the fixture catalog.

use tractlab_core::{hyperfield, FiniteRing, PartialField, Tract, Unit};

use crate::matroid::{bits, Matroid};
use crate::signature::FMatroid;
use crate::vector::{inner_product_f, FVector};
use crate::MatroidError;

/// Refuse searches over more cocircuit assignments than this.
pub const MAX_ASSIGNMENTS: u128 = 10_000_000;

/// All normalized representatives supported on `mask`, in lex order of
/// their unit indices.
fn signings(n: usize, mask: u64, units: usize) -> Vec<FVector> {
    let positions: Vec<usize> = bits(mask).collect();
    let free = positions.len().saturating_sub(1) as u32;
    let count = units.pow(free);
    (0..count)
        .map(|mut k| {
            let mut entries = vec![None; n];
            let mut tail = Vec::with_capacity(free as usize);
            for _ in 0..free {
                tail.push(k % units);
                k /= units;
            }
            tail.reverse();
            entries[positions[0]] = Some(Unit(0));
            for (p, u) in positions[1..].iter().zip(tail) {
                entries[*p] = Some(Unit(u as u16));
            }
            FVector::new(entries)
        })
        .collect()
}

/// The lexicographically least dual pair on `matroid` over `tract`.
///
/// Cocircuit representatives vary in the outer loop (in cocircuit order,
/// last cocircuit fastest); for each assignment every circuit takes its
/// least signing orthogonal to all chosen cocircuits. Unit `0` must be `1`.
pub fn canonical_signing(tract: &Tract, matroid: &Matroid) -> Result<Option<FMatroid>, MatroidError> {
    let c = tract.carrier();
    if c.one() != Unit(0) {
        return Err(MatroidError::Signature("the search assumes unit 0 is 1".into()));
    }
    let n = matroid.len();
    let dual = matroid.dual();
    let units = c.n_units();
    let co_options: Vec<Vec<FVector>> = dual.circuits().iter().map(|&d| signings(n, d, units)).collect();
    let circ_options: Vec<Vec<FVector>> = matroid.circuits().iter().map(|&d| signings(n, d, units)).collect();
    let total: u128 = co_options.iter().map(|o| o.len() as u128).product();
    if total > MAX_ASSIGNMENTS {
        return Err(MatroidError::TooLarge(format!("{total} cocircuit assignments")));
    }
    let mut digits = vec![0usize; co_options.len()];
    for _ in 0..total {
        let chosen: Vec<&FVector> = co_options.iter().zip(&digits).map(|(o, &d)| &o[d]).collect();
        let mut circuits = Vec::with_capacity(circ_options.len());
        for options in &circ_options {
            let mut pick = None;
            for cand in options {
                let g = cand.to_gen(c);
                let mut ok = true;
                for d in &chosen {
                    if !tract.is_null(&inner_product_f(tract, &g, d)?)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    pick = Some(cand.clone());
                    break;
                }
            }
            match pick {
                Some(p) => circuits.push(p),
                None => break,
            }
        }
        if circuits.len() == circ_options.len() {
            let cocircuits = chosen.into_iter().cloned().collect();
            return FMatroid::new(tract.clone(), matroid.clone(), circuits, cocircuits).map(Some);
        }
        for k in (0..digits.len()).rev() {
            digits[k] += 1;
            if digits[k] < co_options[k].len() {
                break;
            }
            digits[k] = 0;
        }
    }
    Ok(None)
}

pub fn sign_tract() -> Tract {
    hyperfield::tract_of(&hyperfield::sign())
}

pub fn gf_tract(p: usize) -> Tract {
    PartialField::all_units(FiniteRing::gf(p).expect("built-in prime"))
        .expect("fields have unit groups")
        .tract_embedding()
}

pub fn sign_product_tract() -> Tract {
    let s = hyperfield::sign();
    hyperfield::tract_of(&hyperfield::product(&s, &s))
}

/// Fixture names and their (tract, rank, size).
pub const CATALOG: &[(&str, &str, usize, usize)] = &[
    ("U12/S", "sign", 1, 2),
    ("U23/S", "sign", 2, 3),
    ("U24/S", "sign", 2, 4),
    ("U12/GF2", "gf2", 1, 2),
    ("U23/GF3", "gf3", 2, 3),
    ("U24/GF3", "gf3", 2, 4),
];

fn tract_by_key(key: &str) -> Option<Tract> {
    match key {
        "sign" => Some(sign_tract()),
        "gf2" => Some(gf_tract(2)),
        "gf3" => Some(gf_tract(3)),
        "sign_product" => Some(sign_product_tract()),
        _ => None,
    }
}

/// Builds a catalog fixture, or `U{r}{n}/SxS` over the sign product.
pub fn fixture(name: &str) -> Result<FMatroid, MatroidError> {
    let unknown = || MatroidError::UnknownFixture(name.to_string());
    let (tract_key, rank, n) = match CATALOG.iter().find(|f| f.0 == name) {
        Some(&(_, t, r, n)) => (t, r, n),
        None => {
            let (shape, tract) = name.split_once('/').ok_or_else(unknown)?;
            let key = match tract {
                "S" => "sign",
                "SxS" => "sign_product",
                "GF2" => "gf2",
                "GF3" => "gf3",
                _ => return Err(unknown()),
            };
            let digits = shape.strip_prefix('U').filter(|d| d.len() == 2).ok_or_else(unknown)?;
            let r = digits[..1].parse().map_err(|_| unknown())?;
            let n = digits[1..].parse().map_err(|_| unknown())?;
            (key, r, n)
        }
    };
    let tract = tract_by_key(tract_key).ok_or_else(unknown)?;
    canonical_signing(&tract, &Matroid::uniform(rank, n)?)?
        .ok_or_else(|| MatroidError::Signature(format!("{name}: no dual pair of signatures exists")))
}

/// Every catalog entry, in catalog order.
pub fn catalog() -> Result<Vec<(&'static str, FMatroid)>, MatroidError> {
    CATALOG.iter().map(|f| Ok((f.0, fixture(f.0)?))).collect()
}
