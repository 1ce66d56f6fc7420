//! Indexed enumeration of all formal sums up to a norm bound.
//!
//! Sums are stored in `(norm, lex)` order, so comparing indices compares sums.
//! Each sum also gets a mixed-radix code with one digit per unit; since no
//! multiplicity can exceed the norm bound, codes add without carries and
//! `code(α + β) = code(α) + code(β)` whenever `‖α + β‖` is in range.

use std::collections::HashMap;
use std::ops::Range;

use rayon::prelude::*;
use thiserror::Error;

use crate::carrier::Carrier;
use crate::formal_sum::{FormalSum, Unit};
use crate::tract::{Tract, TractError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("{count} formal sums of norm at most {bound} over {units} units exceed the enumeration limit {limit}")]
    TooLarge {
        count: u128,
        bound: u32,
        units: usize,
        limit: usize,
    },
}

pub const SPACE_LIMIT: usize = 4_000_000;
const DENSE_LIMIT: u64 = 1 << 22;

enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

pub struct SumSpace {
    units: usize,
    max_norm: u32,
    sums: Vec<FormalSum>,
    norms: Vec<u32>,
    codes: Vec<u64>,
    radix: u64,
    lookup: Lookup,
    norm_start: Vec<usize>,
    neg: Vec<u32>,
}

/// Number of multisets of size at most `n` over `k` kinds: `C(n + k, k)`.
pub fn count_sums(units: usize, max_norm: u32) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=units as u128 {
        c = c * (max_norm as u128 + i) / i;
    }
    c
}

impl SumSpace {
    pub fn new(carrier: &Carrier, max_norm: u32) -> Result<Self, SpaceError> {
        let units = carrier.n_units();
        let count = count_sums(units, max_norm);
        let radix = max_norm as u64 + 1;
        let code_ok = (radix as f64).powi(units as i32) < 1.8e19;
        if count > SPACE_LIMIT as u128 || !code_ok {
            return Err(SpaceError::TooLarge {
                count,
                bound: max_norm,
                units,
                limit: SPACE_LIMIT,
            });
        }
        let mut sums = Vec::with_capacity(count as usize);
        let mut norm_start = Vec::with_capacity(max_norm as usize + 2);
        for n in 0..=max_norm {
            norm_start.push(sums.len());
            let mut counts = vec![0u32; units];
            compositions(n, 0, &mut counts, &mut sums);
        }
        norm_start.push(sums.len());
        let code_of = |s: &FormalSum| s.counts().iter().rev().fold(0u64, |acc, &c| acc * radix + c as u64);
        let codes: Vec<u64> = sums.iter().map(code_of).collect();
        let total = radix.checked_pow(units as u32);
        let lookup = match total {
            Some(t) if t <= DENSE_LIMIT => {
                let mut dense = vec![u32::MAX; t as usize];
                for (i, &c) in codes.iter().enumerate() {
                    dense[c as usize] = i as u32;
                }
                Lookup::Dense(dense)
            }
            _ => Lookup::Sparse(codes.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect()),
        };
        let norms = sums.iter().map(|s| s.norm()).collect();
        let mut space = Self {
            units,
            max_norm,
            sums,
            norms,
            codes,
            radix,
            lookup,
            norm_start,
            neg: Vec::new(),
        };
        let neg = space
            .sums
            .iter()
            .map(|s| space.index_of(&carrier.negate(s)).expect("negation preserves norm") as u32)
            .collect();
        space.neg = neg;
        Ok(space)
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn units(&self) -> usize {
        self.units
    }

    pub fn max_norm(&self) -> u32 {
        self.max_norm
    }

    pub fn sums(&self) -> &[FormalSum] {
        &self.sums
    }

    #[inline]
    pub fn sum(&self, i: usize) -> &FormalSum {
        &self.sums[i]
    }

    #[inline]
    pub fn norm(&self, i: usize) -> u32 {
        self.norms[i]
    }

    /// Indices of the sums of norm exactly `n`.
    pub fn with_norm(&self, n: u32) -> Range<usize> {
        if n > self.max_norm {
            return self.sums.len()..self.sums.len();
        }
        self.norm_start[n as usize]..self.norm_start[n as usize + 1]
    }

    /// Indices of the sums of norm at most `n`.
    pub fn up_to(&self, n: u32) -> Range<usize> {
        0..self.norm_start[(n.min(self.max_norm) + 1) as usize]
    }

    #[inline]
    fn lookup_code(&self, code: u64) -> Option<usize> {
        match &self.lookup {
            Lookup::Dense(d) => d
                .get(code as usize)
                .copied()
                .filter(|&i| i != u32::MAX)
                .map(|i| i as usize),
            Lookup::Sparse(m) => m.get(&code).map(|&i| i as usize),
        }
    }

    pub fn index_of(&self, sum: &FormalSum) -> Option<usize> {
        if sum.units() != self.units || sum.norm() > self.max_norm {
            return None;
        }
        let code = sum
            .counts()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.radix + c as u64);
        self.lookup_code(code)
    }

    /// Index of `sums[i] + sums[j]`, if its norm is in range.
    #[inline]
    pub fn add(&self, i: usize, j: usize) -> Option<usize> {
        if self.norms[i] + self.norms[j] > self.max_norm {
            return None;
        }
        self.lookup_code(self.codes[i] + self.codes[j])
    }

    /// Index of `sums[i] - sums[j]` as a multiset difference, when `sums[j] ⊆ sums[i]`.
    #[inline]
    pub fn sub(&self, i: usize, j: usize) -> Option<usize> {
        if !self.sums[i].contains_sum(&self.sums[j]) {
            return None;
        }
        self.lookup_code(self.codes[i] - self.codes[j])
    }

    /// Index of `-sums[i]`.
    #[inline]
    pub fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    /// Index of the singleton sum `u`, if the bound allows norm one.
    pub fn unit(&self, u: Unit) -> Option<usize> {
        if self.max_norm == 0 {
            return None;
        }
        self.lookup_code(self.radix.pow(u.index() as u32))
    }

    pub fn scale(&self, carrier: &Carrier, u: Unit, i: usize) -> usize {
        self.index_of(&carrier.scale(u, &self.sums[i]))
            .expect("scaling preserves norm")
    }
}

fn compositions(remaining: u32, pos: usize, counts: &mut Vec<u32>, out: &mut Vec<FormalSum>) {
    if pos + 1 == counts.len() {
        counts[pos] = remaining;
        out.push(FormalSum::from_counts(counts.clone()));
        counts[pos] = 0;
        return;
    }
    for c in (0..=remaining).rev() {
        counts[pos] = c;
        compositions(remaining - c, pos + 1, counts, out);
    }
    counts[pos] = 0;
}

/// Nullity of every sum in a space, evaluated in parallel.
pub fn null_table(tract: &Tract, space: &SumSpace) -> Result<Vec<bool>, TractError> {
    tract.require_bound(space.max_norm())?;
    if space.units() != tract.carrier().n_units() {
        return Err(TractError::CarrierMismatch {
            expected: tract.carrier().n_units(),
            got: space.units(),
        });
    }
    Ok(space.sums().par_iter().map(|s| tract.null_unchecked(s)).collect())
}
