//! Library half of the `affine` command-line tool.
//!
//! Every command produces one canonical JSON document and a status. Exit codes:
//! 0 success, 1 input error, 2 mathematical mismatch, 3 budget exceeded.

pub mod cli;
pub mod commands;
pub mod config;
pub mod corpus;
pub mod json;
pub mod suites;

use affine_hecke::HeckeError;
use affine_roots::AffRootsError;
use affine_spherical::SphericalError;
use serde_json::Value;
use thiserror::Error;

pub use config::{QSpec, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<SphericalError> for CliError {
    fn from(e: SphericalError) -> Self {
        match e {
            SphericalError::NotDominant(_) | SphericalError::NeedsVWindow => CliError::Input(e.to_string()),
            SphericalError::NotStabilized { .. } | SphericalError::VFiniteness { .. } => {
                CliError::Budget(e.to_string())
            }
            _ => CliError::Mismatch(e.to_string()),
        }
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        match e {
            HeckeError::Budget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<AffRootsError> for CliError {
    fn from(e: AffRootsError) -> Self {
        match e {
            AffRootsError::Incomplete(_) => CliError::Mismatch(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// A finished command: its report, and whether every check in it passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            2
        }
    }
}
