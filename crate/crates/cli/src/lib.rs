//! Batch front-end for the tractlab checkers.
//!
//! Every verb is a deterministic exhaustive scan. Exit status 0 means every
//! check held, 1 means a check failed (the report carries a witness) and 2
//! means a usage, parse or bound error.

pub mod args;
pub mod commands;
pub mod input;
pub mod scorecard;

use thiserror::Error;

pub use args::{Cli, Command, Format};
pub use commands::{run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] tractlab_core::json::JsonError),
    #[error(transparent)]
    Check(#[from] tractlab_core::CheckError),
    #[error(transparent)]
    Matroid(#[from] tractlab_matroids::MatroidError),
    #[error(transparent)]
    Tract(#[from] tractlab_core::TractError),
    #[error(transparent)]
    Carrier(#[from] tractlab_core::CarrierError),
}
