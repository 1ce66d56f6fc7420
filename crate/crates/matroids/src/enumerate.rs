//! Exhaustive enumeration of generalized vectors and covectors.

use rayon::prelude::*;
use tractlab_core::space::SumSpace;
use tractlab_core::FormalSum;

use crate::signature::{FMatroid, FSignature};
use crate::vector::{inner_product_f, null_or_bound, FVector, GenVector};
use crate::MatroidError;

/// Refuse searches with more candidates than this.
pub const MAX_CANDIDATES: u128 = 50_000_000;

/// Every `X ∈ N[F×]^E` with coordinate norms `≤ coord_bound`, in odometer
/// order: the first coordinate is most significant and each coordinate runs
/// through formal sums in `(norm, lex)` order.
pub fn candidates(fm: &FMatroid, coord_bound: u32) -> Result<(SumSpace, u128), MatroidError> {
    let space = SumSpace::new(fm.carrier(), coord_bound)?;
    let total = (space.len() as u128)
        .checked_pow(fm.len() as u32)
        .filter(|&t| t <= MAX_CANDIDATES)
        .ok_or_else(|| {
            MatroidError::TooLarge(format!(
                "{} sums per coordinate over {} coordinates",
                space.len(),
                fm.len()
            ))
        })?;
    Ok((space, total))
}

fn decode(space: &SumSpace, len: usize, mut index: u128) -> GenVector {
    let base = space.len() as u128;
    let mut entries: Vec<FormalSum> = Vec::with_capacity(len);
    for _ in 0..len {
        entries.push(space.sum((index % base) as usize).clone());
        index /= base;
    }
    entries.reverse();
    GenVector::new(entries)
}

fn orthogonal_to_all(fm: &FMatroid, x: &GenVector, sig: &FSignature) -> Result<bool, MatroidError> {
    let c = fm.carrier();
    for y in sig.vectors() {
        let p = inner_product_f(fm.tract(), x, y)?;
        if !null_or_bound(fm.tract(), &p, || format!("{} · {}", x.display(c), y.display(c)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn orthogonal_complement(fm: &FMatroid, sig: &FSignature, coord_bound: u32) -> Result<Vec<GenVector>, MatroidError> {
    let (space, total) = candidates(fm, coord_bound)?;
    let n = fm.len();
    (0..total as u64)
        .into_par_iter()
        .filter_map(|i| {
            let x = decode(&space, n, i as u128);
            match orthogonal_to_all(fm, &x, sig) {
                Ok(true) => Some(Ok(x)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect()
}

/// `𝒱(M)` truncated at `coord_bound`: everything orthogonal to the F-cocircuits.
pub fn gen_vectors(fm: &FMatroid, coord_bound: u32) -> Result<Vec<GenVector>, MatroidError> {
    orthogonal_complement(fm, fm.cocircuits(), coord_bound)
}

/// `𝒱*(M)` truncated at `coord_bound`: everything orthogonal to the F-circuits.
pub fn gen_covectors(fm: &FMatroid, coord_bound: u32) -> Result<Vec<GenVector>, MatroidError> {
    orthogonal_complement(fm, fm.circuits(), coord_bound)
}

pub fn is_gen_vector(fm: &FMatroid, x: &GenVector) -> Result<bool, MatroidError> {
    orthogonal_to_all(fm, x, fm.cocircuits())
}

pub fn is_gen_covector(fm: &FMatroid, y: &GenVector) -> Result<bool, MatroidError> {
    orthogonal_to_all(fm, y, fm.circuits())
}

/// Vectors in `F^E`.
pub fn vectors(fm: &FMatroid) -> Result<Vec<FVector>, MatroidError> {
    Ok(gen_vectors(fm, 1)?.iter().filter_map(GenVector::to_fvector).collect())
}

/// Covectors in `F^E`.
pub fn covectors(fm: &FMatroid) -> Result<Vec<FVector>, MatroidError> {
    Ok(gen_covectors(fm, 1)?.iter().filter_map(GenVector::to_fvector).collect())
}
