//! Error types shared across the library.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CggError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CggError {
    /// A caller-supplied parameter is out of range or inconsistent.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested block does not exist because the far-arc count has the
    /// wrong parity for its anchor position.
    #[error("infeasible block: far-arc count {far_count} must be {} at anchor {anchor}",
            if *.required_even { "even" } else { "odd" })]
    InfeasibleBlock {
        anchor: i64,
        far_count: u32,
        required_even: bool,
    },

    /// An internal consistency assertion of a construction failed. This
    /// indicates a bug: doubly-defined direction sets must always coincide.
    #[error("construction integrity violation: {0}")]
    ConstructionIntegrity(String),
}
