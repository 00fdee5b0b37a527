//! Error type shared by all solver and attack operations.

use alloc::string::String;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("label must be -1 or +1, got {0}")]
    InvalidLabel(f64),

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("training data contains no points with label {0}")]
    MissingClass(f64),

    #[error("index {index} out of bounds for length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("solver did not converge: KKT violation {kkt_violation:.3e} after {iterations} pair updates")]
    NonConvergence {
        kkt_violation: f64,
        iterations: usize,
    },

    #[error("incremental update failed to settle after {steps} set migrations")]
    MigrationLimit { steps: usize },

    #[error("model has no margin support vectors")]
    NoMarginVectors,

    #[error("degenerate margin-SV geometry: |zeta| = {zeta:.3e} below threshold")]
    DegenerateGeometry { zeta: f64 },
}
