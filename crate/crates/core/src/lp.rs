//! Exact linear programming by the two-phase simplex method with Bland's rule.
//!
//! Generic over any exact ordered field implementing the `num-traits` numeric
//! traits; [`crate::Rational`] is the intended instantiation.

use std::fmt::Debug;

use num_traits::{Num, Signed};

/// Scalars usable by the solver. Arithmetic must be exact for the answers
/// to be decisions rather than approximations.
pub trait Scalar: Clone + Num + Signed + PartialOrd + Debug + Send + Sync {}

impl<T: Clone + Num + Signed + PartialOrd + Debug + Send + Sync> Scalar for T {}

/// `maximize c·x` subject to `A x = b`, `x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram<T> {
    pub constraints: Vec<Vec<T>>,
    pub rhs: Vec<T>,
    pub objective: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Infeasible,
    Unbounded,
    Optimal { value: T, solution: Vec<T> },
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    cols: usize,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * pv.clone();
            }
        }
        self.basis[r] = j;
    }

    fn value(&self, obj: &[T]) -> T {
        self.basis
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, &b)| acc + obj[b].clone() * self.rhs(i).clone())
    }

    /// Runs simplex iterations for `maximize obj·x` over the allowed columns.
    /// Returns `false` if the objective is unbounded.
    fn optimize(&mut self, obj: &[T], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let reduced = self.basis.iter().enumerate().fold(obj[j].clone(), |acc, (i, &b)| {
                    acc - obj[b].clone() * self.rows[i][j].clone()
                });
                reduced > T::zero()
            });
            let Some(j) = entering else { return true };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if *a <= T::zero() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j),
                None => return false,
            }
        }
    }
}

pub fn maximize<T: Scalar>(lp: &LinearProgram<T>) -> LpOutcome<T> {
    let m = lp.constraints.len();
    let n = lp.objective.len();
    assert!(
        lp.rhs.len() == m && lp.constraints.iter().all(|r| r.len() == n),
        "malformed program"
    );
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, b)) in lp.constraints.iter().zip(&lp.rhs).enumerate() {
        let flip = *b < T::zero();
        let mut r: Vec<T> = row.iter().map(|v| if flip { -v.clone() } else { v.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        r.push(if flip { -b.clone() } else { b.clone() });
        rows.push(r);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        cols,
    };
    // Phase one: maximize minus the sum of artificials.
    let phase1: Vec<T> = (0..cols).map(|j| if j < n { T::zero() } else { -T::one() }).collect();
    t.optimize(&phase1, &vec![true; cols]);
    if t.value(&phase1) < T::zero() {
        return LpOutcome::Infeasible;
    }
    // Drive zero-valued artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut obj = lp.objective.clone();
    obj.extend((0..m).map(|_| T::zero()));
    let allowed: Vec<bool> = (0..cols).map(|j| j < n).collect();
    if !t.optimize(&obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut solution = vec![T::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            solution[b] = t.rhs(i).clone();
        }
    }
    LpOutcome::Optimal {
        value: t.value(&obj),
        solution,
    }
}
