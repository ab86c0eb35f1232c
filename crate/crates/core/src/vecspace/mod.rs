//! Dense linear-algebra kernel: inner products, Gram matrices, SPD solves,
//! rank decisions and orthonormal bases.

mod factor;
mod matrix;
mod vector;

pub use factor::{lu_determinant, singular_values, Cholesky, PivotedQr};
pub use matrix::Matrix;
pub use vector::Vector;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use vector::inner;

/// Inner product `⟨u, v⟩`.
pub fn dot<T: Scalar>(u: &Vector<T>, v: &Vector<T>) -> Result<T> {
    u.dot(v)
}

fn check_same_dim<T: Scalar>(vectors: &[Vector<T>]) -> Result<usize> {
    let dim = vectors
        .first()
        .ok_or(Error::EmptyInput("no vectors"))?
        .dim();
    if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.dim(),
        });
    }
    Ok(dim)
}

/// Gram matrix `G(a_1, …, a_m)` with entries `⟨a_i, a_j⟩`.
///
/// Each off-diagonal product is computed once and mirrored, so the result is
/// symmetric bit for bit.
pub fn gram<T: Scalar>(vectors: &[Vector<T>]) -> Result<Matrix<T>> {
    check_same_dim(vectors)?;
    let m = vectors.len();
    let mut g = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..=i {
            let v = inner(vectors[i].as_slice(), vectors[j].as_slice());
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    Ok(g)
}

/// Solves `G y = rhs` for symmetric positive-definite `G` with the default
/// relative pivot tolerance ([`Scalar::default_rank_tol`]).
pub fn solve_spd<T: Scalar>(g: &Matrix<T>, rhs: &Vector<T>) -> Result<Vector<T>> {
    solve_spd_with_tol(g, rhs, T::default_rank_tol())
}

/// Solves `G y = rhs` by pivoted Cholesky; a pivot at most `pivot_tol` times
/// the largest diagonal entry raises [`Error::NotPositiveDefinite`].
pub fn solve_spd_with_tol<T: Scalar>(g: &Matrix<T>, rhs: &Vector<T>, pivot_tol: T) -> Result<Vector<T>> {
    if g.rows() != rhs.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.rows(),
            found: rhs.dim(),
        });
    }
    Cholesky::factor(g, pivot_tol)?.solve(rhs)
}

/// Determinant of a square matrix from an LU factorization with partial pivoting.
pub fn det_via_factorization<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    lu_determinant(m)
}

/// Greedy Gram–Schmidt sweep in input order: vector `i` is kept when its
/// residual against the already kept ones exceeds `tol · max_j ‖v_j‖`.
/// Returns the kept indices alongside the orthonormal basis they produce.
fn greedy_basis<T: Scalar>(vectors: &[Vector<T>], tol: T) -> (Vec<usize>, Vec<Vector<T>>) {
    let largest = vectors.iter().fold(T::zero(), |m, v| m.max(v.norm()));
    let threshold = tol * largest;
    let mut picked = Vec::new();
    let mut basis: Vec<Vector<T>> = Vec::new();
    if largest == T::zero() {
        return (picked, basis);
    }
    for (i, v) in vectors.iter().enumerate() {
        let mut r = v.clone();
        // two passes keep the basis orthogonal to working precision
        for _ in 0..2 {
            for q in &basis {
                let c = inner(q.as_slice(), r.as_slice());
                r.axpy(-c, q);
            }
        }
        let norm = r.norm();
        if norm > threshold {
            picked.push(i);
            basis.push(r * (T::one() / norm));
        }
    }
    (picked, basis)
}

/// Indices of a maximal linearly independent subset, chosen in input order
/// (earliest index wins) with relative threshold `tol`.
///
/// Returns an empty list when every vector is zero.
pub fn max_independent_subset<T: Scalar>(vectors: &[Vector<T>], tol: T) -> Result<Vec<usize>> {
    check_same_dim(vectors)?;
    Ok(greedy_basis(vectors, tol).0)
}

/// Orthonormal basis of `span(vectors)`. Vectors whose residual falls below
/// `tol` relative to the largest input norm are skipped.
pub fn orthonormalize<T: Scalar>(vectors: &[Vector<T>], tol: T) -> Result<Vec<Vector<T>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    check_same_dim(vectors)?;
    Ok(greedy_basis(vectors, tol).1)
}

/// Orthonormal basis of the orthogonal complement of `span(onb)` in R^dim,
/// where `onb` is already orthonormal.
///
/// Standard basis vectors are taken in order of largest remaining residual,
/// which keeps every accepted residual norm at least `1/sqrt(dim)`.
pub fn complement_basis<T: Scalar>(onb: &[Vector<T>], dim: usize) -> Result<Vec<Vector<T>>> {
    if let Some(q) = onb.iter().find(|q| q.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: q.dim(),
        });
    }
    let target = dim.saturating_sub(onb.len());
    let mut residuals: Vec<Vector<T>> = (0..dim)
        .map(|i| {
            let mut r = Vector::unit(dim, i);
            for q in onb {
                r.axpy(-q[i], q);
            }
            r
        })
        .collect();
    let mut out: Vec<Vector<T>> = Vec::with_capacity(target);
    for _ in 0..target {
        let (best, _) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r.norm_squared()))
            .fold((0, -T::one()), |acc, c| if c.1 > acc.1 { c } else { acc });
        let mut q = residuals[best].clone();
        for _ in 0..2 {
            for b in onb.iter().chain(out.iter()) {
                let c = inner(b.as_slice(), q.as_slice());
                q.axpy(-c, b);
            }
        }
        let norm = q.norm();
        if norm == T::zero() {
            break;
        }
        let q = q * (T::one() / norm);
        for r in &mut residuals {
            let c = inner(q.as_slice(), r.as_slice());
            r.axpy(-c, &q);
        }
        out.push(q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn v(x: &[f64]) -> Vector<f64> {
        Vector::from_f64(x)
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
        assert_eq!(dot(&v(&[1.0, 2.0, 3.0]), &v(&[1.0, 2.0, 3.0])).unwrap(), 14.0);
        assert_eq!(dot(&v(&[2.0, 0.0]), &v(&[3.0, 4.0])).unwrap(), 6.0);
        assert!(matches!(
            dot(&v(&[1.0]), &v(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn gram_examples() {
        let g = gram(&[v(&[1.0, 0.0]), v(&[0.0, 1.0])]).unwrap();
        assert_eq!(g, Matrix::identity(2));
        let g = gram(&[v(&[1.0, 0.0]), v(&[1.0, 1.0])]).unwrap();
        assert_eq!(g.as_slice(), &[1.0, 1.0, 1.0, 2.0]);
        // differences of the square's vertices (4,0), (0,4) from the origin
        let g = gram(&[v(&[4.0, 0.0]), v(&[0.0, 4.0])]).unwrap();
        assert_eq!(g.as_slice(), &[16.0, 0.0, 0.0, 16.0]);
        assert!(gram::<f64>(&[]).is_err());
        assert!(gram(&[v(&[1.0]), v(&[1.0, 0.0])]).is_err());
    }

    #[test]
    fn solve_spd_examples() {
        let y = solve_spd(&Matrix::identity(2), &v(&[3.0, 5.0])).unwrap();
        assert_eq!(y.as_slice(), &[3.0, 5.0]);
        let g = Matrix::from_rows(&[vec![16.0, 0.0], vec![0.0, 16.0]]).unwrap();
        let y = solve_spd(&g, &v(&[8.0, 8.0])).unwrap();
        assert_eq!(y.as_slice(), &[0.5, 0.5]);
        let g = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(
            solve_spd(&g, &v(&[1.0, 2.0])),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn independent_subset_examples() {
        let s = max_independent_subset(&[v(&[1.0, 0.0]), v(&[2.0, 0.0]), v(&[0.0, 1.0])], 1e-10);
        assert_eq!(s.unwrap(), vec![0, 2]);
        assert!(max_independent_subset(&[v(&[0.0, 0.0])], 1e-10).unwrap().is_empty());
        let s = max_independent_subset(&[v(&[1.0, 0.0, 0.0]), v(&[0.0, 1.0, 0.0])], 1e-10);
        assert_eq!(s.unwrap(), vec![0, 1]);
    }

    #[test]
    fn orthonormalize_examples() {
        let q = orthonormalize(&[v(&[2.0, 0.0])], 1e-10).unwrap();
        assert_eq!(q, vec![v(&[1.0, 0.0])]);
        let q = orthonormalize(&[v(&[1.0, 0.0]), v(&[1.0, 1.0])], 1e-10).unwrap();
        assert_eq!(q, vec![v(&[1.0, 0.0]), v(&[0.0, 1.0])]);
        let q = orthonormalize(&[v(&[1.0, 1.0]), v(&[2.0, 2.0])], 1e-10).unwrap();
        assert_eq!(q.len(), 1);
        let h = 0.5_f64.sqrt();
        assert_relative_eq!(q[0][0], h, max_relative = 1e-15);
        assert_relative_eq!(q[0][1], h, max_relative = 1e-15);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_via_factorization(&Matrix::<f64>::identity(3)).unwrap(), 1.0);
        let d = Matrix::from_rows(&[vec![16.0, 0.0], vec![0.0, 16.0]]).unwrap();
        assert_eq!(det_via_factorization(&d).unwrap(), 256.0);
        let s = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(det_via_factorization(&s).unwrap(), 0.0);
    }

    #[test]
    fn complement_of_a_line() {
        let h = 0.5_f64.sqrt();
        let c = complement_basis(&[v(&[h, h, 0.0])], 3).unwrap();
        assert_eq!(c.len(), 2);
        for q in &c {
            assert!(q[0] * h + q[1] * h < 1e-15);
            assert_relative_eq!(q.norm(), 1.0, max_relative = 1e-15);
        }
        assert!(c[0].dot(&c[1]).unwrap().abs() < 1e-15);
    }
}
