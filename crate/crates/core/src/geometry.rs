//! Planar poses, angle arithmetic and velocity commands.

use crate::error::CoreError;
use crate::Result;
use nalgebra::Vector2;
use std::f64::consts::PI;

/// A ground-plane point in meters.
pub type Point = Vector2<f64>;

/// An image point in pixels.
pub type Pixel = Vector2<f64>;

/// Wrap an angle to `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Planar pose of the robot chassis: position in meters, heading in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose2 {
    pub x: f64,
    pub y: f64,
    /// Heading, kept in `(-pi, pi]`.
    pub theta: f64,
}

impl Pose2 {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Pose2 {
            x,
            y,
            theta: wrap_angle(theta),
        }
    }

    pub fn identity() -> Self {
        Pose2 {
            x: 0.0,
            y: 0.0,
            theta: 0.0,
        }
    }

    pub fn position(&self) -> Point {
        Point::new(self.x, self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.theta.is_finite()
    }

    /// Compose two poses: `self ∘ other` (apply `other` in `self`'s frame).
    pub fn compose(&self, other: &Pose2) -> Pose2 {
        let (s, c) = self.theta.sin_cos();
        Pose2::new(
            self.x + c * other.x - s * other.y,
            self.y + s * other.x + c * other.y,
            self.theta + other.theta,
        )
    }

    /// Inverse pose, so that `p.compose(&p.inverse())` is the identity.
    pub fn inverse(&self) -> Pose2 {
        let (s, c) = self.theta.sin_cos();
        Pose2::new(-(c * self.x + s * self.y), s * self.x - c * self.y, -self.theta)
    }

    /// Map a point expressed in this pose's frame into the world frame.
    pub fn transform(&self, local: &Point) -> Point {
        let (s, c) = self.theta.sin_cos();
        Point::new(
            self.x + c * local.x - s * local.y,
            self.y + s * local.x + c * local.y,
        )
    }

    /// Map a world point into this pose's frame.
    pub fn inverse_transform(&self, world: &Point) -> Point {
        let (s, c) = self.theta.sin_cos();
        let dx = world.x - self.x;
        let dy = world.y - self.y;
        Point::new(c * dx + s * dy, -s * dx + c * dy)
    }
}

/// Map a world point into the robot frame given the robot pose.
pub fn world_to_robot(pose: &Pose2, world_point: &Point) -> Point {
    pose.inverse_transform(world_point)
}

/// Map a robot-frame point into the world frame.
pub fn robot_to_world(pose: &Pose2, robot_point: &Point) -> Point {
    pose.transform(robot_point)
}

/// Chassis velocity command: linear (m/s) and angular (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ControlCommand {
    pub v: f64,
    pub omega: f64,
}

impl ControlCommand {
    pub fn new(v: f64, omega: f64) -> Self {
        ControlCommand { v, omega }
    }

    pub fn zero() -> Self {
        ControlCommand { v: 0.0, omega: 0.0 }
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite() && self.omega.is_finite()
    }

    pub fn validate(&self) -> Result<()> {
        if !self.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "non-finite command ({}, {})",
                self.v, self.omega
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn wrap_keeps_half_open_interval() {
        assert_relative_eq!(wrap_angle(PI), PI);
        assert_relative_eq!(wrap_angle(-PI), PI);
        assert_relative_eq!(wrap_angle(3.0 * PI / 2.0), -PI / 2.0, epsilon = 1e-12);
        assert_relative_eq!(wrap_angle(-3.0 * PI), PI, epsilon = 1e-12);
        assert_relative_eq!(wrap_angle(0.25), 0.25);
    }

    #[test]
    fn compose_with_identity_is_identity() {
        let p = Pose2::new(1.5, -2.0, 0.7);
        let id = Pose2::identity();
        let a = p.compose(&id);
        let b = id.compose(&p);
        assert_relative_eq!(a.x, p.x);
        assert_relative_eq!(a.y, p.y);
        assert_relative_eq!(a.theta, p.theta);
        assert_relative_eq!(b.x, p.x);
        assert_relative_eq!(b.y, p.y);
        assert_relative_eq!(b.theta, p.theta);
    }

    #[test]
    fn world_to_robot_identity_pose() {
        let p = Pose2::identity();
        let q = world_to_robot(&p, &Point::new(2.0, 3.0));
        assert_relative_eq!(q.x, 2.0);
        assert_relative_eq!(q.y, 3.0);
    }

    #[test]
    fn world_to_robot_translation_only() {
        let p = Pose2::new(1.0, 0.0, 0.0);
        let q = world_to_robot(&p, &Point::new(2.0, 0.0));
        assert_relative_eq!(q.x, 1.0);
        assert_relative_eq!(q.y, 0.0);
    }

    #[test]
    fn world_to_robot_quarter_turn() {
        // R(pi/2)^T * (0,1) = (1,0)
        let p = Pose2::new(0.0, 0.0, PI / 2.0);
        let q = world_to_robot(&p, &Point::new(0.0, 1.0));
        assert_relative_eq!(q.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(q.y, 0.0, epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn transform_round_trip(
            x in -10.0f64..10.0, y in -10.0f64..10.0, th in -6.0f64..6.0,
            px in -10.0f64..10.0, py in -10.0f64..10.0,
        ) {
            let pose = Pose2::new(x, y, th);
            let p = Point::new(px, py);
            let back = robot_to_world(&pose, &world_to_robot(&pose, &p));
            prop_assert!((back - p).norm() < 1e-9);
        }

        #[test]
        fn inverse_composes_to_identity(x in -10.0f64..10.0, y in -10.0f64..10.0, th in -6.0f64..6.0) {
            let pose = Pose2::new(x, y, th);
            let id = pose.compose(&pose.inverse());
            prop_assert!(id.x.abs() < 1e-9);
            prop_assert!(id.y.abs() < 1e-9);
            prop_assert!(wrap_angle(id.theta).abs() < 1e-9 || (wrap_angle(id.theta).abs() - PI).abs() < 1e-9);
        }

        #[test]
        fn wrap_stays_in_interval(a in -100.0f64..100.0) {
            let w = wrap_angle(a);
            prop_assert!(w > -PI && w <= PI);
        }
    }
}
