//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by simulation, training, control and evaluation.
#[derive(Debug, Error)]
pub enum CoreError {
    /// An input that must be finite (pose, command, dt) was not.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Homography is singular or nearly so.
    #[error("singular homography (|det| = {det:.3e})")]
    SingularHomography { det: f64 },

    /// A point projected onto (or beyond) the camera horizon.
    #[error("point at horizon: homogeneous w = {w:.3e}")]
    PointAtHorizon { w: f64 },

    /// Dot pattern ids are not unique or positions are not finite.
    #[error("invalid dot pattern: {0}")]
    InvalidPattern(String),

    /// Self-calibration drive produced no usable flow samples.
    #[error("empty calibration dataset: {0}")]
    EmptyDataset(String),

    /// Network weights contain non-finite values.
    #[error("corrupt model: {0}")]
    CorruptModel(String),

    /// Training loss became NaN or infinite.
    #[error("training diverged at epoch {epoch}")]
    TrainingDiverged { epoch: usize },

    /// The stacked normal equations are ill-conditioned.
    #[error("degenerate point geometry (condition number {cond:.3e})")]
    DegenerateGeometry { cond: f64 },

    /// Measurements and targets share no point id.
    #[error("no common points between measurements and targets")]
    NoCommonPoints,

    /// A trajectory or trace has no samples.
    #[error("empty trajectory")]
    EmptyTrajectory,

    /// Metric preconditions not met (series too short, no time overlap...).
    #[error("metric error: {0}")]
    Metric(String),

    /// Model file could not be parsed.
    #[error("model format error: {0}")]
    ModelFormat(String),

    /// CSV or file-format level problem.
    #[error("format error: {0}")]
    Format(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for CoreError {
    fn from(e: csv::Error) -> Self {
        CoreError::Format(e.to_string())
    }
}
