//! Dense factorizations: pivoted Cholesky, partially pivoted LU (for
//! determinants), column-pivoted Householder QR and one-sided Jacobi SVD.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::matrix::Matrix;
use super::vector::{inner, Vector};

/// Diagonally pivoted Cholesky factorization `P G Pᵀ = L Lᵀ` of a symmetric
/// positive-definite matrix.
#[derive(Debug, Clone)]
pub struct Cholesky<T> {
    lower: Matrix<T>,
    perm: Vec<usize>,
}

impl<T: Scalar> Cholesky<T> {
    /// Factors `g`, failing with [`Error::NotPositiveDefinite`] as soon as the
    /// largest remaining pivot is at most `pivot_tol` times the largest diagonal entry.
    pub fn factor(g: &Matrix<T>, pivot_tol: T) -> Result<Self> {
        if !g.is_square() {
            return Err(Error::DimensionMismatch {
                expected: g.rows(),
                found: g.cols(),
            });
        }
        let n = g.rows();
        let scale = g.max_abs();
        for i in 0..n {
            for j in 0..i {
                if (g[(i, j)] - g[(j, i)]).abs() > T::lit(1e-12) * scale {
                    return Err(Error::InvalidArgument("matrix is not symmetric".into()));
                }
            }
        }
        let max_diag = (0..n).fold(T::zero(), |m, i| m.max(g[(i, i)]));
        let threshold = pivot_tol * max_diag;

        let mut work = g.clone();
        let mut lower = Matrix::zeros(n, n);
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&a, &b| work[(a, a)].partial_cmp(&work[(b, b)]).unwrap())
                .unwrap();
            let pivot = work[(p, p)];
            if !(pivot > threshold) || pivot <= T::zero() {
                return Err(Error::NotPositiveDefinite { pivot: k });
            }
            if p != k {
                perm.swap(k, p);
                swap_sym(&mut work, k, p);
                for j in 0..k {
                    let t = lower[(k, j)];
                    lower[(k, j)] = lower[(p, j)];
                    lower[(p, j)] = t;
                }
            }
            let d = pivot.sqrt();
            lower[(k, k)] = d;
            for i in k + 1..n {
                lower[(i, k)] = work[(i, k)] / d;
            }
            for i in k + 1..n {
                for j in k + 1..=i {
                    let v = work[(i, j)] - lower[(i, k)] * lower[(j, k)];
                    work[(i, j)] = v;
                    work[(j, i)] = v;
                }
            }
        }
        Ok(Self { lower, perm })
    }

    pub fn solve(&self, rhs: &Vector<T>) -> Result<Vector<T>> {
        let n = self.perm.len();
        if rhs.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rhs.dim(),
            });
        }
        let l = &self.lower;
        let mut w: Vec<T> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            let mut s = w[i];
            for j in 0..i {
                s = s - l[(i, j)] * w[j];
            }
            w[i] = s / l[(i, i)];
        }
        for i in (0..n).rev() {
            let mut s = w[i];
            for j in i + 1..n {
                s = s - l[(j, i)] * w[j];
            }
            w[i] = s / l[(i, i)];
        }
        let mut y = Vector::zeros(n);
        for (i, &p) in self.perm.iter().enumerate() {
            y[p] = w[i];
        }
        Ok(y)
    }

    /// Product of the squared diagonal of `L`, i.e. `det(G)`.
    pub fn determinant(&self) -> T {
        (0..self.perm.len()).fold(T::one(), |d, i| {
            let v = self.lower[(i, i)];
            d * v * v
        })
    }
}

fn swap_sym<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    let n = m.rows();
    for j in 0..n {
        let t = m[(a, j)];
        m[(a, j)] = m[(b, j)];
        m[(b, j)] = t;
    }
    for i in 0..n {
        let t = m[(i, a)];
        m[(i, a)] = m[(i, b)];
        m[(i, b)] = t;
    }
}

/// Determinant by Gaussian elimination with partial pivoting. Returns exactly
/// zero when a column has no nonzero pivot.
pub fn lu_determinant<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut det = T::one();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[(x, k)].abs().partial_cmp(&a[(y, k)].abs()).unwrap())
            .unwrap();
        if a[(p, k)] == T::zero() {
            return Ok(T::zero());
        }
        if p != k {
            for j in 0..n {
                let t = a[(k, j)];
                a[(k, j)] = a[(p, j)];
                a[(p, j)] = t;
            }
            det = -det;
        }
        let pivot = a[(k, k)];
        det = det * pivot;
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            if f == T::zero() {
                continue;
            }
            for j in k + 1..n {
                a[(i, j)] = a[(i, j)] - f * a[(k, j)];
            }
        }
    }
    Ok(det)
}

/// Householder QR with column pivoting, `A P = Q R`, truncated at the
/// numerical rank.
#[derive(Debug, Clone)]
pub struct PivotedQr<T> {
    rows: usize,
    cols: usize,
    /// Upper-triangular factor, `rank` rows used.
    r: Matrix<T>,
    /// Unit Householder vectors acting on rows `k..`.
    reflectors: Vec<Vec<T>>,
    perm: Vec<usize>,
    rank: usize,
}

impl<T: Scalar> PivotedQr<T> {
    /// Factors `a`; a diagonal entry of `R` counts toward the rank while it
    /// exceeds `tol` times the first (largest) one.
    pub fn factor(a: &Matrix<T>, tol: T) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let mut w = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut reflectors = Vec::new();
        let mut rank = 0;
        let mut lead = T::zero();
        for k in 0..m.min(n) {
            let col_norm = |w: &Matrix<T>, j: usize| {
                (k..m).map(|i| w[(i, j)] * w[(i, j)]).sum::<T>().sqrt()
            };
            let (p, best) = (k..n)
                .map(|j| (j, col_norm(&w, j)))
                .fold((k, -T::one()), |acc, c| if c.1 > acc.1 { c } else { acc });
            if k == 0 {
                lead = best;
            }
            if !(best > tol * lead) || best == T::zero() {
                break;
            }
            if p != k {
                perm.swap(k, p);
                for i in 0..m {
                    let t = w[(i, k)];
                    w[(i, k)] = w[(i, p)];
                    w[(i, p)] = t;
                }
            }
            let x0 = w[(k, k)];
            let alpha = if x0 >= T::zero() { -best } else { best };
            let mut v: Vec<T> = (k..m).map(|i| w[(i, k)]).collect();
            v[0] = v[0] - alpha;
            let vnorm = inner(&v, &v).sqrt();
            if vnorm > T::zero() {
                for e in &mut v {
                    *e = *e / vnorm;
                }
                for j in k..n {
                    let s = (k..m).map(|i| v[i - k] * w[(i, j)]).sum::<T>();
                    let two_s = s + s;
                    for i in k..m {
                        w[(i, j)] = w[(i, j)] - two_s * v[i - k];
                    }
                }
            }
            w[(k, k)] = alpha;
            for i in k + 1..m {
                w[(i, k)] = T::zero();
            }
            reflectors.push(v);
            rank += 1;
        }
        Self {
            rows: m,
            cols: n,
            r: w,
            reflectors,
            perm,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Column order chosen by the pivoting.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Basic least-squares solution of `A x ≈ b` and the residual norm `‖A x − b‖`.
    pub fn solve_least_squares(&self, b: &Vector<T>) -> Result<(Vector<T>, T)> {
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.dim(),
            });
        }
        let mut qtb = b.clone().into_vec();
        for (k, v) in self.reflectors.iter().enumerate() {
            let s = (k..self.rows).map(|i| v[i - k] * qtb[i]).sum::<T>();
            let two_s = s + s;
            for i in k..self.rows {
                qtb[i] = qtb[i] - two_s * v[i - k];
            }
        }
        let r = self.rank;
        let mut z = vec![T::zero(); r];
        for i in (0..r).rev() {
            let mut s = qtb[i];
            for j in i + 1..r {
                s = s - self.r[(i, j)] * z[j];
            }
            z[i] = s / self.r[(i, i)];
        }
        let mut x = Vector::zeros(self.cols);
        for (k, &zk) in z.iter().enumerate() {
            x[self.perm[k]] = zk;
        }
        let residual = qtb[r..].iter().map(|&v| v * v).sum::<T>().sqrt();
        Ok((x, residual))
    }
}

/// Singular values of `a` in decreasing order, by one-sided Jacobi rotations.
pub fn singular_values<T: Scalar>(a: &Matrix<T>) -> Vec<T> {
    let a = if a.cols() > a.rows() { a.transpose() } else { a.clone() };
    let n = a.cols();
    let mut cols: Vec<Vec<T>> = (0..n).map(|j| a.column(j).into_vec()).collect();
    let eps = T::epsilon();
    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = inner(&cols[p], &cols[p]);
                let beta = inner(&cols[q], &cols[q]);
                let gamma = inner(&cols[p], &cols[q]);
                if gamma == T::zero() || gamma.abs() <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (gamma + gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = cols.split_at_mut(q);
                for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    let (u, v) = (*x, *y);
                    *x = c * u - s * v;
                    *y = s * u + c * v;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<T> = cols.iter().map(|c| inner(c, c).sqrt()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}
