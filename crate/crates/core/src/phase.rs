//! Phases on rational points of the unit circle and their null sets.
//!
//! A sum of phases is null when some strictly positive combination of the
//! points vanishes. This is decided exactly by a linear program.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::carrier::{Carrier, CarrierError};
use crate::closure::NullAboveThree;
use crate::formal_sum::{FormalSum, Unit};
use crate::lp::{maximize, LinearProgram, LpOutcome, Scalar};
use crate::tract::{NullOracle, Tract};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhaseError {
    #[error("point ({0}, {1}) is not on the unit circle")]
    OffCircle(String, String),
    #[error("cannot parse `{0}` as a rational number")]
    BadNumber(String),
    #[error("the points do not generate a finite group (more than {0} elements)")]
    NotFinite(usize),
    #[error("the point group must contain -1")]
    NoMinusOne,
    #[error(transparent)]
    Carrier(#[from] CarrierError),
}

/// A point `(x, y)` with `x² + y² = 1`, i.e. a unit complex number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhasePointOf<T> {
    x: T,
    y: T,
}

impl<T: Scalar> PhasePointOf<T> {
    pub fn new(x: T, y: T) -> Result<Self, PhaseError> {
        if x.clone() * x.clone() + y.clone() * y.clone() != T::one() {
            return Err(PhaseError::OffCircle(format!("{x:?}"), format!("{y:?}")));
        }
        Ok(Self { x, y })
    }

    pub fn one() -> Self {
        Self {
            x: T::one(),
            y: T::zero(),
        }
    }

    pub fn x(&self) -> &T {
        &self.x
    }

    pub fn y(&self) -> &T {
        &self.y
    }

    /// Complex multiplication.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            x: self.x.clone() * other.x.clone() - self.y.clone() * other.y.clone(),
            y: self.x.clone() * other.y.clone() + self.y.clone() * other.x.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Rotation by a quarter turn, `i · p`.
    pub fn perp(&self) -> Self {
        Self {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// `x·other.y - y·other.x`: positive when `other` lies counterclockwise
    /// within a half turn.
    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }
}

impl<T: fmt::Debug> fmt::Debug for PhasePointOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl PhasePointOf<Rational> {
    pub fn parse(x: &str, y: &str) -> Result<Self, PhaseError> {
        Self::new(parse_rational(x)?, parse_rational(y)?)
    }

    /// `1`, `-1`, `i`, `-i` for the axis points, otherwise `(x,y)`.
    pub fn name(&self) -> String {
        let (zero, one) = (Rational::zero(), Rational::one());
        match (&self.x, &self.y) {
            (x, y) if *x == one && *y == zero => "1".into(),
            (x, y) if *x == -one.clone() && *y == zero => "-1".into(),
            (x, y) if x.is_zero() && *y == one => "i".into(),
            (x, y) if x.is_zero() && *y == -one.clone() => "-i".into(),
            (x, y) => format!("({x},{y})"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, PhaseError> {
    let bad = || PhaseError::BadNumber(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Whether `Σ cᵢ pᵢ = 0` for some strictly positive `cᵢ`.
///
/// Solves `max t` subject to `Σ cᵢ pᵢ = 0`, `Σ cᵢ = 1`, `cᵢ ≥ t`, all
/// variables nonnegative; the answer is yes exactly when the optimum is
/// positive. An empty list has no such combination.
pub fn contains_zero_positive_combination<T: Scalar>(points: &[PhasePointOf<T>]) -> bool {
    let n = points.len();
    if n == 0 {
        return false;
    }
    // Columns: c_1..c_n, t, s_1..s_n.
    let cols = 2 * n + 1;
    let mut constraints = Vec::with_capacity(n + 3);
    let row = |f: &dyn Fn(usize) -> T| -> Vec<T> { (0..cols).map(|j| if j < n { f(j) } else { T::zero() }).collect() };
    constraints.push(row(&|j| points[j].x.clone()));
    constraints.push(row(&|j| points[j].y.clone()));
    constraints.push(row(&|_| T::one()));
    let mut rhs = vec![T::zero(), T::zero(), T::one()];
    for i in 0..n {
        let mut r = vec![T::zero(); cols];
        r[i] = T::one();
        r[n] = -T::one();
        r[n + 1 + i] = -T::one();
        constraints.push(r);
        rhs.push(T::zero());
    }
    let mut objective = vec![T::zero(); cols];
    objective[n] = T::one();
    match maximize(&LinearProgram {
        constraints,
        rhs,
        objective,
    }) {
        LpOutcome::Optimal { value, .. } => value > T::zero(),
        _ => false,
    }
}

/// Symbolic value of a two-term phase hypersum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhaseSum<T> {
    Zero,
    Point(PhasePointOf<T>),
    /// The open arc strictly between the endpoints, going the short way.
    OpenArc(PhasePointOf<T>, PhasePointOf<T>),
    /// `{p, -p, 0}`.
    Antipodal(PhasePointOf<T>),
}

impl<T: Scalar> PhaseSum<T> {
    pub fn contains_zero(&self) -> bool {
        matches!(self, PhaseSum::Zero | PhaseSum::Antipodal(_))
    }
}

/// `a ⊞ b` in the phase hyperfield, with `None` standing for zero.
pub fn phase_hypersum2<T: Scalar>(a: Option<&PhasePointOf<T>>, b: Option<&PhasePointOf<T>>) -> PhaseSum<T> {
    match (a, b) {
        (None, None) => PhaseSum::Zero,
        (Some(p), None) | (None, Some(p)) => PhaseSum::Point(p.clone()),
        (Some(p), Some(q)) if p == q => PhaseSum::Point(p.clone()),
        (Some(p), Some(q)) if *p == q.neg() => PhaseSum::Antipodal(p.clone()),
        (Some(p), Some(q)) => {
            if p.cross(q) > T::zero() {
                PhaseSum::OpenArc(p.clone(), q.clone())
            } else {
                PhaseSum::OpenArc(q.clone(), p.clone())
            }
        }
    }
}

/// A finite multiplicative group of rational circle points containing `-1`.
#[derive(Debug, Clone)]
pub struct PhaseGroup {
    points: Vec<PhasePointOf<Rational>>,
    carrier: Arc<Carrier>,
}

pub const MAX_PHASE_GROUP: usize = 64;

impl PhaseGroup {
    /// The group generated by the given points together with `-1`.
    pub fn generated_by(generators: &[PhasePointOf<Rational>]) -> Result<Self, PhaseError> {
        let one = PhasePointOf::one();
        let mut points = vec![one.clone(), one.neg()];
        let mut frontier = points.clone();
        let gens: Vec<_> = generators.iter().cloned().chain([one.neg()]).collect();
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.mul(g);
                if !points.contains(&q) {
                    if points.len() == MAX_PHASE_GROUP {
                        return Err(PhaseError::NotFinite(MAX_PHASE_GROUP));
                    }
                    points.push(q.clone());
                    frontier.push(q);
                }
            }
        }
        Self::from_points(points)
    }

    /// Uses the points as given; they must already form a group with `-1`.
    pub fn from_points(points: Vec<PhasePointOf<Rational>>) -> Result<Self, PhaseError> {
        let one = PhasePointOf::<Rational>::one();
        let index = |p: &PhasePointOf<Rational>| points.iter().position(|q| q == p);
        let minus = index(&one.neg()).ok_or(PhaseError::NoMinusOne)?;
        let id = index(&one).ok_or(PhaseError::NotFinite(points.len()))?;
        let mut mul = Vec::with_capacity(points.len());
        for p in &points {
            let mut row = Vec::with_capacity(points.len());
            for q in &points {
                let k = index(&p.mul(q)).ok_or(PhaseError::NotFinite(points.len()))?;
                row.push(Unit(k as u16));
            }
            mul.push(row);
        }
        let names = points.iter().map(|p| p.name()).collect();
        let carrier = Carrier::new("0", names, mul, Unit(id as u16), Unit(minus as u16))?;
        Ok(Self {
            points,
            carrier: Arc::new(carrier),
        })
    }

    pub fn points(&self) -> &[PhasePointOf<Rational>] {
        &self.points
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn point(&self, u: Unit) -> &PhasePointOf<Rational> {
        &self.points[u.index()]
    }
}

/// Null set of the phase hyperfield restricted to a finite point group.
/// Answers depend only on the support, so they are tabulated per support.
pub struct PhaseOracle {
    group: PhaseGroup,
    table: Option<Vec<bool>>,
}

const TABULATE_UP_TO: usize = 12;

impl PhaseOracle {
    pub fn new(group: PhaseGroup) -> Self {
        let n = group.points.len();
        let table = (n <= TABULATE_UP_TO).then(|| {
            (0..1usize << n)
                .map(|mask| {
                    let pts: Vec<_> = (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| group.points[i].clone())
                        .collect();
                    mask == 0 || contains_zero_positive_combination(&pts)
                })
                .collect()
        });
        Self { group, table }
    }

    pub fn group(&self) -> &PhaseGroup {
        &self.group
    }
}

impl NullOracle for PhaseOracle {
    fn contains(&self, sum: &FormalSum) -> bool {
        match &self.table {
            Some(t) => {
                let mask = sum.support().fold(0usize, |m, u| m | 1 << u.index());
                t[mask]
            }
            None => {
                let pts: Vec<_> = sum.support().map(|u| self.group.point(u).clone()).collect();
                pts.is_empty() || contains_zero_positive_combination(&pts)
            }
        }
    }

    fn valid_norm_bound(&self) -> Option<u32> {
        None
    }

    fn describe(&self) -> String {
        format!("phase nullity on {} points", self.group.points.len())
    }
}

pub fn phase_tract(group: PhaseGroup) -> Tract {
    let carrier = group.carrier().clone();
    Tract::new("phase", carrier, Arc::new(PhaseOracle::new(group)))
}

/// Phase nullity on norms `≤ 3`, and every sum of norm `≥ 4` null.
pub fn p_prime(group: PhaseGroup) -> Tract {
    let carrier = group.carrier().clone();
    Tract::new(
        "p_prime",
        carrier,
        Arc::new(NullAboveThree::new(Arc::new(PhaseOracle::new(group)))),
    )
}

/// `{±1, ±i}`.
pub fn quarter_turns() -> PhaseGroup {
    let i = PhasePointOf::new(Rational::zero(), Rational::one()).expect("on circle");
    PhaseGroup::generated_by(&[i]).expect("finite")
}
