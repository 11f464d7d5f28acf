use thiserror::Error;

use crate::growing::ClusterModel;
use crate::minimerror::TrainDiagnostics;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid schema: {0}")]
    InvalidSchema(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Input-file parse failure; `row` is the 1-based CSV line (header = line 1).
    #[error("parse error at row {row}, column `{column}`: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("labels required: {0}")]
    LabelsRequired(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A cluster lost all of its membership mass.
    #[error("degenerate class {class}: zero membership mass at iteration {iteration}")]
    DegenerateClass { class: usize, iteration: usize },

    /// Training produced a non-finite cost; diagnostics cover the epochs run so far.
    #[error("non-finite cost at epoch {epoch}")]
    NonFiniteCost {
        epoch: usize,
        diagnostics: Box<TrainDiagnostics>,
    },

    /// The sphere radius stayed pinned at the positivity floor.
    #[error("degenerate sphere: radius pinned at the floor for {epochs} consecutive epochs")]
    DegenerateSphere {
        epochs: usize,
        diagnostics: Box<TrainDiagnostics>,
    },

    /// The growing clusterer hit its safety cap; `partial` holds the model built so far.
    #[error("class cap exceeded: more than {max_classes} clusters")]
    MaxClassesExceeded {
        max_classes: usize,
        partial: Box<ClusterModel>,
    },

    #[error("class {class} has no members")]
    EmptyClass { class: usize },

    #[error("pruning with min_size {min_size} removes every class")]
    AllClassesPruned { min_size: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
