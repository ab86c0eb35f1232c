//! Floating-point scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar usable by the kernels: `f32` or `f64`.
///
/// Besides the arithmetic supplied by [`Float`], each implementation carries
/// the default tolerances used by the rank decisions, circumcenter
/// verification and duplicate merging. The `f64` values are the reference
/// ones; the `f32` values are scaled to that type's precision.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Sum + Send + Sync + 'static
{
    /// Relative threshold for linear-independence decisions.
    fn default_rank_tol() -> Self;
    /// Relative tolerance for the equidistance check of a circumcenter candidate.
    fn default_verify_tol() -> Self;
    /// Relative distance under which two listed points are treated as the same point.
    fn default_dedup_tol() -> Self;

    /// Converts an `f64` literal. Every finite `f64` is representable (possibly rounded).
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal not representable")
    }
}

impl Scalar for f64 {
    fn default_rank_tol() -> Self {
        1e-10
    }
    fn default_verify_tol() -> Self {
        1e-8
    }
    fn default_dedup_tol() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn default_rank_tol() -> Self {
        1e-5
    }
    fn default_verify_tol() -> Self {
        1e-3
    }
    fn default_dedup_tol() -> Self {
        1e-5
    }
}
