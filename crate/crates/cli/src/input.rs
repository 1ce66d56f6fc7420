use std::path::Path;

use tractlab_core::json::{
    builtin_hyperfield_ref, builtin_tract_ref, hyperfield_from_value, read_json, tract_from_value,
};
use tractlab_core::{Hyperfield, Tract};
use tractlab_matroids::fixtures::fixture;
use tractlab_matroids::json::fmatroid_from_value;
use tractlab_matroids::FMatroid;

use crate::CliError;

pub fn load_tract(reference: &str) -> Result<Tract, CliError> {
    if reference.starts_with("builtin:") {
        return Ok(builtin_tract_ref(reference)?);
    }
    Ok(tract_from_value(read_json(Path::new(reference))?)?)
}

pub fn load_hyperfield(reference: &str) -> Result<Hyperfield, CliError> {
    if reference.starts_with("builtin:") {
        return Ok(builtin_hyperfield_ref(reference)?);
    }
    Ok(hyperfield_from_value(read_json(Path::new(reference))?)?)
}

pub fn load_fmatroid(reference: &str) -> Result<FMatroid, CliError> {
    if let Some(name) = reference.strip_prefix("fixture:") {
        return Ok(fixture(name)?);
    }
    Ok(fmatroid_from_value(read_json(Path::new(reference))?)?)
}
