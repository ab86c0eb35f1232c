//! Determinant-ratio (Cramer's rule) route to the circumcenter coefficients,
//! used to cross-check the Gram solve.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::{max_independent_subset, Vector};

use super::dword::{self, DWord};

use super::types::PointSet;

fn frame<T: Scalar>(set: &PointSet<T>, base_index: usize) -> Result<(&Vector<T>, Vec<Vector<T>>)> {
    let pts = set.points();
    let base = pts.get(base_index).ok_or_else(|| {
        Error::InvalidArgument(format!("base index {base_index} out of range for {} points", pts.len()))
    })?;
    let diffs = pts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != base_index)
        .map(|(_, p)| p - base)
        .collect();
    Ok((base, diffs))
}

/// Coefficients `α_i = det(A_i) / (2 det A)` of the circumcenter in the
/// frame based at `points[base_index]`, listed in the order of the remaining
/// points. `A` is the Gram matrix of the differences to the base point and
/// `A_i` is `A` with its `i`-th column replaced by the squared lengths of
/// those differences. Everything from the differences onward is evaluated in
/// double-word arithmetic, so the result is accurate to working precision for
/// any reasonably conditioned frame and independent of the chosen base.
pub fn cramer_coefficients<T: Scalar>(set: &PointSet<T>, base_index: usize) -> Result<Vec<T>> {
    let (_, diffs) = frame(set, base_index)?;
    if diffs.is_empty() {
        return Ok(Vec::new());
    }
    if max_independent_subset(&diffs, T::default_rank_tol())?.len() < diffs.len() {
        return Err(Error::NotAffinelyIndependent);
    }
    let pts = set.points();
    let base = &pts[base_index];
    let wide: Vec<Vec<DWord<T>>> = pts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != base_index)
        .map(|(_, p)| p.iter().zip(base.iter()).map(|(&x, &b)| DWord::diff(x, b)).collect())
        .collect();
    let dot = |u: &[DWord<T>], v: &[DWord<T>]| u.iter().zip(v).fold(DWord::zero(), |acc, (&a, &b)| acc + a * b);
    let n = wide.len();
    let a: Vec<Vec<DWord<T>>> = (0..n)
        .map(|i| (0..n).map(|j| dot(&wide[i], &wide[j])).collect())
        .collect();
    let sq: Vec<DWord<T>> = (0..n).map(|i| a[i][i]).collect();
    let delta = dword::determinant(a.clone());
    if delta.to_scalar() == T::zero() {
        return Err(Error::NotAffinelyIndependent);
    }
    let two_delta = delta + delta;
    Ok((0..n)
        .map(|col| {
            let mut ai = a.clone();
            for (row, &s) in sq.iter().enumerate() {
                ai[row][col] = s;
            }
            (dword::determinant(ai) / two_delta).to_scalar()
        })
        .collect())
}

/// The point `x_base + Σ α_i (x_i − x_base)` for coefficients in the order
/// returned by [`cramer_coefficients`].
pub fn frame_point<T: Scalar>(set: &PointSet<T>, base_index: usize, coefficients: &[T]) -> Result<Vector<T>> {
    let (base, diffs) = frame(set, base_index)?;
    if coefficients.len() != diffs.len() {
        return Err(Error::DimensionMismatch {
            expected: diffs.len(),
            found: coefficients.len(),
        });
    }
    let mut p = base.clone();
    for (c, d) in coefficients.iter().zip(&diffs) {
        p.axpy(*c, d);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circumcenter::circumcenter_gram;
    use approx::assert_abs_diff_eq;

    fn set(points: &[&[f64]]) -> PointSet<f64> {
        PointSet::from_f64(points).unwrap()
    }

    #[test]
    fn diagonal_gram() {
        let s = set(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 4.0]]);
        assert_eq!(cramer_coefficients(&s, 0).unwrap(), vec![0.5, 0.5]);
        let s = set(&[&[0.0, 0.0], &[2.0, 0.0]]);
        assert_eq!(cramer_coefficients(&s, 0).unwrap(), vec![0.5]);
    }

    #[test]
    fn base_change_relations() {
        let s = set(&[&[0.1, 0.0, 1.0], &[2.0, -0.5, 0.3], &[0.4, 1.7, -0.2], &[-1.0, 0.6, 0.9]]);
        let m = s.len();
        let alpha = cramer_coefficients(&s, 0).unwrap();
        for kk in 1..m {
            let beta = cramer_coefficients(&s, kk).unwrap();
            let k = kk + 1; // 1-based position of the new base point
            let sum_a: f64 = alpha.iter().sum();
            let sum_b: f64 = beta.iter().sum();
            assert_abs_diff_eq!(1.0 - sum_a, beta[0], epsilon = 1e-12);
            assert_abs_diff_eq!(alpha[k - 2], 1.0 - sum_b, epsilon = 1e-12);
            for i in 2..k {
                assert_abs_diff_eq!(alpha[i - 2], beta[i - 1], epsilon = 1e-12);
            }
            for j in k..m {
                assert_abs_diff_eq!(alpha[j - 1], beta[j - 1], epsilon = 1e-12);
            }
            let p = frame_point(&s, kk, &beta).unwrap();
            assert!(p.distance(&circumcenter_gram(&s).unwrap()) < 1e-12);
        }
    }

    #[test]
    fn dependent_and_bad_index() {
        let s = set(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]);
        assert_eq!(cramer_coefficients(&s, 0), Err(Error::NotAffinelyIndependent));
        assert!(matches!(cramer_coefficients(&s, 3), Err(Error::InvalidArgument(_))));
    }
}
