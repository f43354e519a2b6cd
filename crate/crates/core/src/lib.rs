//! Desk-scale simulator and control library for projector-guided mobile
//! 3D printing with learning-based visual servoing.
//!
//! The crate is organized around the closed loop it simulates:
//!
//! - [`geometry`] / [`camera`] / [`sim`]: planar robot kinematics, the
//!   ground-plane homography camera, dot patterns and noisy pixel
//!   measurements, plus the analytic interaction-matrix oracle.
//! - [`net`]: the learned interaction-matrix function (a small ReLU MLP
//!   trained from self-supervised drive data) with from-scratch forward,
//!   backward and training passes.
//! - [`control`] / [`trajectory`]: the visual-servoing control law with
//!   gain scheduling, velocity saturation and the reduced-point rotation
//!   mode, driven by a timed pattern trajectory.
//! - [`printhead`]: arm kinematics on the chassis, rotation-compensated
//!   corners, bead deposition and wall-thickness measurement.
//! - [`eval`]: trajectory-error and velocity-lag metrics, junction gaps,
//!   and deterministic CSV/SVG reports.

pub mod camera;
pub mod control;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod net;
pub mod paths;
pub mod printhead;
pub mod sim;
pub mod trajectory;

pub use camera::CameraModel;
pub use control::{ControlMode, ControllerConfig, GainSchedule, TargetPattern};
pub use error::CoreError;
pub use geometry::{ControlCommand, Pose2};
pub use net::{CalibrationDataset, FlowSample, InteractionModel, InteractionNet, TrainConfig};
pub use sim::{DotPattern, MeasurementSet, WorldSim};
pub use trajectory::PatternTrajectory;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CoreError>;
