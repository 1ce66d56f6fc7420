//! Matroids over tracts: dual pairs of F-signatures, generalized vectors and
//! covectors, the wedge operator, series/parallel extensions, minors and
//! bounded perfection certificates.

use thiserror::Error;
use tractlab_core::formal_sum::SumError;
use tractlab_core::json::JsonError;
use tractlab_core::space::SpaceError;
use tractlab_core::TractError;

pub mod checks;
pub mod enumerate;
pub mod fixtures;
pub mod json;
pub mod matroid;
pub mod ops;
pub mod signature;
pub mod vector;

pub use checks::{
    certificate_json, certify_perfection, certify_strong_perfection, check_lower_term, check_minor_props,
    check_supp_lemma, check_wedge_closure,
};
pub use enumerate::{covectors, gen_covectors, gen_vectors, vectors};
pub use matroid::Matroid;
pub use ops::{expand_matroid, parallel_extend, series_extend, Expansion};
pub use signature::{check_dual_pair, check_f_signature, FMatroid, FSignature};
pub use vector::{inner_product, is_orthogonal, wedge, FVector, GenVector};

#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("invalid ground set: {0}")]
    Ground(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("circuit axioms fail: {0}")]
    CircuitAxiom(String),
    #[error("vector of length {got} where {expected} was expected")]
    LengthMismatch { expected: usize, got: usize },
    #[error("search too large: {0}")]
    TooLarge(String),
    #[error("inner product {pair} has norm {required}, beyond the oracle bound {bound}")]
    OracleBound { required: u32, bound: u32, pair: String },
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("not a dual pair: {0}")]
    NotDualPair(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid F-matroid document: {0}")]
    Json(String),
    #[error(transparent)]
    Tract(#[from] TractError),
    #[error(transparent)]
    Sum(#[from] SumError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Core(#[from] JsonError),
}
