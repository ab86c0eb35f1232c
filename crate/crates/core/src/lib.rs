//! Circumcenters of finite point sets and the circumcentered reflection
//! methods built on them.
//!
//! The numerical core is generic over [`Scalar`] (`f32` or `f64`); the
//! `*64`/`*32` aliases below fix the scalar type for everyday use.

pub mod affine;
pub mod circumcenter;
mod error;
mod scalar;
pub mod problems;
pub mod solvers;
pub mod vecspace;

pub use affine::{affine_hull, friedrichs_cos, intersect, intersect_all, AffineSubspace};
pub use circumcenter::{CircumConfig, CircumOutcome, PointSet};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use vecspace::{Matrix, Vector};

pub type Vector64 = Vector<f64>;
pub type Vector32 = Vector<f32>;
pub type Matrix64 = Matrix<f64>;
pub type Matrix32 = Matrix<f32>;
pub type PointSet64 = PointSet<f64>;
pub type PointSet32 = PointSet<f32>;
pub type CircumOutcome64 = CircumOutcome<f64>;
pub type AffineSubspace64 = AffineSubspace<f64>;
pub type AffineSubspace32 = AffineSubspace<f32>;
pub type Problem64 = solvers::Problem<f64>;
pub type SolverTrace64 = solvers::SolverTrace<f64>;
