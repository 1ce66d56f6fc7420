//! Vectors over a tract: single-valued `FVector`s and multiset-valued `GenVector`s.

use std::fmt;

use tractlab_core::{Carrier, FormalSum, Tract, TractError, Unit};

use crate::MatroidError;

/// A point of `F^E`: each coordinate is zero or a unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector {
    entries: Vec<Option<Unit>>,
}

impl FVector {
    pub fn new(entries: Vec<Option<Unit>>) -> Self {
        Self { entries }
    }

    pub fn zero(len: usize) -> Self {
        Self {
            entries: vec![None; len],
        }
    }

    pub fn entries(&self) -> &[Option<Unit>] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<Unit> {
        self.entries[i]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Option::is_none)
    }

    pub fn support(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_some())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn scale(&self, carrier: &Carrier, u: Unit) -> FVector {
        FVector::new(self.entries.iter().map(|x| x.map(|x| carrier.mul(u, x))).collect())
    }

    /// The orbit member whose first nonzero coordinate is `1`.
    pub fn normalized(&self, carrier: &Carrier) -> FVector {
        match self.entries.iter().flatten().next() {
            Some(&first) => self.scale(carrier, carrier.inv(first)),
            None => self.clone(),
        }
    }

    pub fn to_gen(&self, carrier: &Carrier) -> GenVector {
        GenVector::new(
            self.entries
                .iter()
                .map(|x| match x {
                    Some(u) => carrier.singleton(*u),
                    None => carrier.empty_sum(),
                })
                .collect(),
        )
    }

    pub fn display(&self, carrier: &Carrier) -> String {
        let parts: Vec<&str> = self.entries.iter().map(|&x| carrier.element_name(x)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|x| x.map_or("0".to_string(), |u| u.index().to_string()))
            .collect();
        write!(f, "FVector({})", parts.join(","))
    }
}

/// A point of `N[F×]^E`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenVector {
    entries: Vec<FormalSum>,
}

impl GenVector {
    pub fn new(entries: Vec<FormalSum>) -> Self {
        Self { entries }
    }

    pub fn zero(carrier: &Carrier, len: usize) -> Self {
        Self::new(vec![carrier.empty_sum(); len])
    }

    pub fn entries(&self) -> &[FormalSum] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<FormalSum> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &FormalSum {
        &self.entries[i]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_empty())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Single-valued form, if every coordinate has norm at most one.
    pub fn to_fvector(&self) -> Option<FVector> {
        self.entries
            .iter()
            .map(|s| match s.norm() {
                0 => Some(None),
                1 => s.support().next().map(Some),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(FVector::new)
    }

    /// Drops coordinate `i`.
    pub fn remove(&self, i: usize) -> GenVector {
        let mut entries = self.entries.clone();
        entries.remove(i);
        GenVector::new(entries)
    }

    pub fn display(&self, carrier: &Carrier) -> String {
        let parts: Vec<String> = self.entries.iter().map(|s| carrier.display_sum(s)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for GenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

fn check_lengths(x: usize, y: usize) -> Result<(), MatroidError> {
    if x != y {
        return Err(MatroidError::LengthMismatch { expected: x, got: y });
    }
    Ok(())
}

/// `X·Y = Σ X(e)·τ(Y(e))` as a formal sum.
pub fn inner_product(t: &Tract, x: &GenVector, y: &GenVector) -> Result<FormalSum, MatroidError> {
    check_lengths(x.len(), y.len())?;
    let c = t.carrier();
    let inv = t.involution();
    let mut total = c.empty_sum();
    for (a, b) in x.entries.iter().zip(&y.entries) {
        if a.is_empty() || b.is_empty() {
            continue;
        }
        total = total.checked_add(&c.mul_sums(a, &inv.apply_sum(b)))?;
    }
    Ok(total)
}

/// Inner product against a single-valued vector, without building sums per coordinate.
pub fn inner_product_f(t: &Tract, x: &GenVector, y: &FVector) -> Result<FormalSum, MatroidError> {
    check_lengths(x.len(), y.len())?;
    let c = t.carrier();
    let mut counts = vec![0u32; c.n_units()];
    for (a, b) in x.entries.iter().zip(&y.entries) {
        if let Some(b) = b {
            let b = t.involution().apply(*b);
            for (u, k) in a.to_pairs() {
                counts[c.mul(u, b).index()] += k;
            }
        }
    }
    Ok(FormalSum::from_counts(counts))
}

pub(crate) fn null_or_bound(t: &Tract, sum: &FormalSum, pair: impl FnOnce() -> String) -> Result<bool, MatroidError> {
    match t.is_null(sum) {
        Ok(b) => Ok(b),
        Err(TractError::OutOfBound { norm, bound }) => Err(MatroidError::OracleBound {
            required: norm,
            bound,
            pair: pair(),
        }),
        Err(e) => Err(e.into()),
    }
}

/// `X ⊥ Y`: the inner product is null. Errors if it leaves the oracle's bound.
pub fn is_orthogonal(t: &Tract, x: &GenVector, y: &GenVector) -> Result<bool, MatroidError> {
    let p = inner_product(t, x, y)?;
    null_or_bound(t, &p, || {
        format!("{} · {}", x.display(t.carrier()), y.display(t.carrier()))
    })
}

/// `X ∧_e Y`: empty at `e`, and `Y(e)X(f) - X(e)Y(f)` elsewhere.
pub fn wedge(t: &Tract, x: &GenVector, y: &GenVector, e: usize) -> Result<GenVector, MatroidError> {
    check_lengths(x.len(), y.len())?;
    if e >= x.len() {
        return Err(MatroidError::Ground(format!(
            "coordinate {e} outside a vector of length {}",
            x.len()
        )));
    }
    let c = t.carrier();
    let (xe, ye) = (&x.entries[e], &y.entries[e]);
    let entries = (0..x.len())
        .map(|f| {
            if f == e {
                c.empty_sum()
            } else {
                &c.mul_sums(ye, &x.entries[f]) + &c.negate(&c.mul_sums(xe, &y.entries[f]))
            }
        })
        .collect();
    Ok(GenVector::new(entries))
}
