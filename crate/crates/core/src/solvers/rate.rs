use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::run::SolverTrace;

/// Minimum number of iterations (beyond the starting point) a trace needs.
pub const MIN_RATE_ITERATIONS: usize = 5;

/// Empirical linear rate of a distance sequence `d_0, d_1, …`.
///
/// Geometric mean of `d_{k+1} / d_k` over the second half of the sequence,
/// skipping every ratio whose `d_k` has already fallen below
/// `100 · ε · d_0`.
pub fn estimate_rate_from_distances<T: Scalar>(distances: &[T]) -> Result<T> {
    let iterations = distances.len().saturating_sub(1);
    if iterations < MIN_RATE_ITERATIONS || !(distances[0] > T::zero()) {
        return Err(Error::InsufficientData);
    }
    let floor = T::lit(100.0) * T::epsilon() * distances[0];
    let start = iterations / 2;
    let (mut log_sum, mut count) = (T::zero(), 0usize);
    for k in start..iterations {
        let (d, next) = (distances[k], distances[k + 1]);
        if d < floor || !(d > T::zero()) {
            continue;
        }
        log_sum = log_sum + (next / d).ln();
        count += 1;
    }
    if count == 0 {
        return Err(Error::InsufficientData);
    }
    Ok((log_sum / T::from_usize(count).unwrap()).exp())
}

/// Empirical rate of a solver run from its distances to the reference solution.
pub fn estimate_rate<T: Scalar>(trace: &SolverTrace<T>) -> Result<T> {
    estimate_rate_from_distances(&trace.distances())
}
