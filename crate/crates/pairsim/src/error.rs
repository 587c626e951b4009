//! Error types shared by the numeric modules.

use thiserror::Error;

/// Errors produced by embedding, loss, gradient, retrieval and training code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A row to be normalized has a norm below the zero threshold.
    #[error("row {row} has norm {norm:e}, below the 1e-12 zero threshold")]
    ZeroRow { row: usize, norm: f64 },

    /// Two batches that must share a shape do not.
    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// An input value is NaN or infinite.
    #[error("non-finite input at index {index}")]
    NonFinite { index: usize },

    /// A matrix does not satisfy the minimum batch/dimension requirements.
    #[error("invalid dimensions {rows}x{cols}: {reason}")]
    InvalidDimensions {
        rows: usize,
        cols: usize,
        reason: &'static str,
    },

    /// A similarity entry strays outside [-1, 1] beyond tolerance.
    #[error("similarity ({i},{j}) = {value} lies outside [-1, 1]")]
    SimilarityOutOfRange { i: usize, j: usize, value: f64 },

    /// The weighted loss was requested without a weight matrix.
    #[error("weighted loss requires a weight matrix")]
    MissingWeights,

    /// A loss weight is zero or negative.
    #[error("weight ({i},{j}) = {value} must be strictly positive")]
    NonPositiveWeight { i: usize, j: usize, value: f64 },

    /// The per-anchor margin vector does not match the batch size.
    #[error("margin vector has length {got}, batch size is {expected}")]
    MarginLengthMismatch { expected: usize, got: usize },

    /// An operation needs at least two items per modality.
    #[error("need at least two items, got {got}")]
    TooFewItems { got: usize },

    /// A recall cutoff outside 1..=batch.
    #[error("recall cutoff {k} outside 1..={batch}")]
    BadCutoff { k: usize, batch: usize },

    /// Training produced a non-finite loss.
    #[error("training diverged at epoch {epoch} (loss = {loss})")]
    Diverged { epoch: usize, loss: f64 },

    /// A configuration field fails validation.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
