//! Exact computation with tracts, pastures, hyperfields and partial fields.
//!
//! Null sets are decided by oracles with an explicit validity bound, and every
//! axiom checker is an exhaustive search over formal sums up to a norm bound.

pub mod axioms;
pub mod carrier;
pub mod closure;
pub mod formal_sum;
pub mod hyperfield;
pub mod json;
pub mod lemmas;
pub mod lp;
pub mod partial_field;
pub mod pasture;
pub mod phase;
pub mod report;
pub mod space;
pub mod tract;

pub use axioms::{
    check_axiom, check_fusion, check_idyll, check_msf, check_strong_fusion, check_tract_axioms, CheckError,
};
pub use carrier::{Carrier, CarrierError};
pub use formal_sum::{FormalSum, Unit};
pub use hyperfield::Hyperfield;
pub use partial_field::{FiniteRing, PartialField};
pub use pasture::Pasture;
pub use report::{Axiom, AxiomReport, Witness, WitnessPart};
pub use tract::{Morphism, NullOracle, Tract, TractError};

/// Exact rationals used by the phase arithmetic.
pub type Rational = num_rational::BigRational;

/// A phase point with exact rational coordinates.
pub type PhasePoint = phase::PhasePointOf<Rational>;
