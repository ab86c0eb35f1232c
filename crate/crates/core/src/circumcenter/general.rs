use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::{gram, max_independent_subset, solve_spd_with_tol, Vector};

use super::types::{CircumConfig, CircumOutcome, PointSet};

/// Drops every point within `tol` of an earlier kept point. Order is preserved.
pub fn dedup<T: Scalar>(set: &PointSet<T>, tol: T) -> PointSet<T> {
    let mut kept: Vec<Vector<T>> = Vec::with_capacity(set.len());
    for p in set.points() {
        if kept.iter().all(|q| p.distance(q) > tol) {
            kept.push(p.clone());
        }
    }
    PointSet::new(kept).expect("dedup keeps the first point")
}

/// `x_1 + Σ α_i (x_{i+1} − x_1)` with `α = ½ G⁻¹ (‖x_{i+1} − x_1‖²)_i`.
pub(crate) fn gram_candidate<T: Scalar>(points: &[Vector<T>], pivot_tol: T) -> Result<Vector<T>> {
    let base = &points[0];
    if points.len() == 1 {
        return Ok(base.clone());
    }
    let diffs: Vec<Vector<T>> = points[1..].iter().map(|p| p - base).collect();
    let g = gram(&diffs)?;
    let rhs: Vector<T> = diffs.iter().map(Vector::norm_squared).collect();
    let alpha = match solve_spd_with_tol(&g, &rhs, pivot_tol) {
        Ok(y) => y * T::lit(0.5),
        Err(Error::NotPositiveDefinite { .. }) => return Err(Error::NotAffinelyIndependent),
        Err(e) => return Err(e),
    };
    let mut center = base.clone();
    for (a, d) in alpha.iter().zip(&diffs) {
        center.axpy(*a, d);
    }
    Ok(center)
}

/// Circumcenter of affinely independent points via their Gram matrix.
pub fn circumcenter_gram<T: Scalar>(set: &PointSet<T>) -> Result<Vector<T>> {
    gram_candidate(set.points(), T::default_rank_tol())
}

/// Equidistance test: `max_i ‖p − x_i‖ − min_i ‖p − x_i‖ ≤ tol · (1 + max_i ‖p − x_i‖)`.
pub fn verify_equidistant<T: Scalar>(p: &Vector<T>, set: &PointSet<T>, tol: T) -> Result<bool> {
    if p.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: p.dim(),
        });
    }
    let (lo, hi) = distance_range(p, set.points());
    Ok(hi - lo <= tol * (T::one() + hi))
}

fn distance_range<T: Scalar>(p: &Vector<T>, points: &[Vector<T>]) -> (T, T) {
    points.iter().fold((T::infinity(), T::zero()), |(lo, hi), x| {
        let d = p.distance(x);
        (lo.min(d), hi.max(d))
    })
}

fn mean_distance<T: Scalar>(p: &Vector<T>, points: &[Vector<T>]) -> T {
    let total: T = points.iter().map(|x| p.distance(x)).sum();
    total / T::from_usize(points.len()).unwrap()
}

/// Circumcenter operator on an arbitrary finite list of points.
///
/// The list is deduplicated, a maximal affinely independent subset `K` with
/// `aff K = aff S` is picked, and the circumcenter of `K` is accepted only if
/// it is equidistant from every point of `S`. This is never an error: a set
/// without circumcenter yields [`CircumOutcome::Empty`].
pub fn circumcenter<T: Scalar>(set: &PointSet<T>, cfg: &CircumConfig<T>) -> CircumOutcome<T> {
    let distinct = dedup(set, cfg.merge_distance(set));
    let pts = distinct.points();
    let base = &pts[0];
    if pts.len() == 1 {
        return CircumOutcome::Exists {
            center: base.clone(),
            radius: T::zero(),
        };
    }
    let diffs: Vec<Vector<T>> = pts[1..].iter().map(|p| p - base).collect();
    let picked = max_independent_subset(&diffs, cfg.rank_tol).expect("points share one dimension");
    let mut frame = Vec::with_capacity(picked.len() + 1);
    frame.push(base.clone());
    frame.extend(picked.iter().map(|&i| pts[i + 1].clone()));

    // Cholesky pivots are squared residual norms, hence the squared threshold.
    let candidate = match gram_candidate(&frame, cfg.rank_tol * cfg.rank_tol) {
        Ok(c) if c.is_finite() => c,
        _ => return CircumOutcome::Empty,
    };
    let (lo, hi) = distance_range(&candidate, pts);
    if hi - lo <= cfg.verify_tol * (T::one() + hi) {
        let radius = mean_distance(&candidate, pts);
        CircumOutcome::Exists {
            center: candidate,
            radius,
        }
    } else {
        log::trace!("circumcenter candidate rejected: spread {:e}", hi - lo);
        CircumOutcome::Empty
    }
}

/// Circumradius operator; `+∞` when the circumcenter is empty.
pub fn circumradius<T: Scalar>(set: &PointSet<T>, cfg: &CircumConfig<T>) -> T {
    circumcenter(set, cfg).radius()
}
