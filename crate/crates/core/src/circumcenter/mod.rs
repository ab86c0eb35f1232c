//! Circumcenter and circumradius operators on finite point sets.
//!
//! The circumcenter of `S` is the unique point of `aff S` equidistant from
//! every point of `S`, when such a point exists. [`circumcenter`] handles
//! arbitrary lists; the remaining entry points are specialised formulas used
//! as fast paths and cross-checks.

mod cramer;
mod cross;
mod dword;
mod general;
mod three;
mod types;

pub use cramer::{cramer_coefficients, frame_point};
pub use cross::{circumcenter_cross3, circumradius_cross3, cross3};
pub use general::{circumcenter, circumcenter_gram, circumradius, dedup, verify_equidistant};
pub use three::circumcenter_three;
pub use types::{CircumConfig, CircumOutcome, PointSet};
