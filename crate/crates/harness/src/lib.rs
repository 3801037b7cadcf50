//! Instance generators, invariant reports, theorem sweeps and the `M_k`
//! search, shared by the `collapsibility` binary and its tests.

pub mod generate;
pub mod report;
pub mod search;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown invariant {0:?}")]
    UnknownInvariant(String),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("{0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Core(#[from] collapsibility::Error),
}

impl HarnessError {
    /// Whether the error stems from a bad command line rather than a
    /// computation.
    pub fn is_usage(&self) -> bool {
        !matches!(self, HarnessError::Core(_))
    }
}
