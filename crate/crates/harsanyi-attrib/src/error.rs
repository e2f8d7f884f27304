//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("variable count must be at least 1")]
    ZeroVariables,

    #[error("value array has length {len}, expected 2^{n} = {expected}")]
    BadLength {
        len: usize,
        n: usize,
        expected: usize,
    },

    #[error("mask {mask} appears more than once")]
    DuplicateMask { mask: u64 },

    #[error("mask {mask} has no value")]
    MissingMask { mask: u64 },

    #[error("mask {mask} is out of range for n = {n}")]
    MaskOutOfRange { mask: u64, n: usize },

    #[error("non-finite value at mask {mask}")]
    NonFinite { mask: u64 },

    #[error("planted mask must be nonempty")]
    EmptyPlantedMask,

    #[error("expected {expected} per-variable entries, got {got}")]
    BadWeightCount { expected: usize, got: usize },

    #[error("variable index {index} is out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("variable index {index} appears more than once in the coalition")]
    DuplicateIndex { index: usize },

    #[error("coalition must be nonempty")]
    EmptyCoalition,

    #[error("variable {index} is not a member of the coalition")]
    VariableNotInCoalition { index: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("optimizer diverged: loss {loss:.6e} exceeded the limit {limit:.6e}")]
    Diverged { loss: f64, limit: f64 },

    #[error("mask sets of two operands disagree (n = {left} vs n = {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code associated with this error when surfaced by the CLI:
    /// 2 for input problems, 3 for optimizer divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Diverged { .. } => 3,
            _ => 2,
        }
    }
}
