//! Affine subspaces `V = base + span(onb)` of R^n: projections, reflections,
//! intersections, affine hulls and the Friedrichs angle.

use crate::circumcenter::PointSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::{complement_basis, orthonormalize, singular_values, Matrix, PivotedQr, Vector};

/// Threshold used to decide which directions two subspaces share.
pub const INTERSECTION_TOL: f64 = 1e-8;

/// An affine subspace stored as a base point plus an orthonormal basis of
/// its parallel linear subspace (empty for a single point).
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSubspace<T> {
    base: Vector<T>,
    onb: Vec<Vector<T>>,
}

impl<T: Scalar> AffineSubspace<T> {
    /// `base + span(spanning)`; the basis is orthonormalized with relative threshold `tol`.
    pub fn from_span(base: Vector<T>, spanning: &[Vector<T>], tol: T) -> Result<Self> {
        if let Some(v) = spanning.iter().find(|v| v.dim() != base.dim()) {
            return Err(Error::DimensionMismatch {
                expected: base.dim(),
                found: v.dim(),
            });
        }
        let onb = orthonormalize(spanning, tol)?;
        Ok(Self { base, onb })
    }

    /// Wraps an already orthonormal basis, checking it to `1e-12`.
    pub fn from_orthonormal(base: Vector<T>, onb: Vec<Vector<T>>) -> Result<Self> {
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(64.0));
        for (i, q) in onb.iter().enumerate() {
            base.check_dim(q)?;
            for (j, p) in onb[..=i].iter().enumerate() {
                let target = if i == j { T::one() } else { T::zero() };
                if (q.dot(p)? - target).abs() > tol {
                    return Err(Error::InvalidArgument("basis is not orthonormal".into()));
                }
            }
        }
        Ok(Self { base, onb })
    }

    /// Linear subspace (through the origin) spanned by `spanning`.
    pub fn linear(dim: usize, spanning: &[Vector<T>], tol: T) -> Result<Self> {
        Self::from_span(Vector::zeros(dim), spanning, tol)
    }

    /// The whole space R^dim.
    pub fn full(dim: usize) -> Self {
        Self {
            base: Vector::zeros(dim),
            onb: (0..dim).map(|i| Vector::unit(dim, i)).collect(),
        }
    }

    pub fn base(&self) -> &Vector<T> {
        &self.base
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.onb
    }

    /// Dimension of the subspace itself.
    pub fn dim(&self) -> usize {
        self.onb.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.dim()
    }

    /// The parallel linear subspace.
    pub fn linear_part(&self) -> Self {
        Self {
            base: Vector::zeros(self.ambient_dim()),
            onb: self.onb.clone(),
        }
    }

    /// The same direction space moved to pass through `point`.
    pub fn through(&self, point: Vector<T>) -> Result<Self> {
        self.base.check_dim(&point)?;
        Ok(Self {
            base: point,
            onb: self.onb.clone(),
        })
    }

    /// Orthonormal basis of the orthogonal complement of the direction space.
    pub fn normal_basis(&self) -> Vec<Vector<T>> {
        complement_basis(&self.onb, self.ambient_dim()).expect("basis matches ambient dimension")
    }

    /// Orthogonal projection `P_V x`.
    pub fn project(&self, x: &Vector<T>) -> Result<Vector<T>> {
        self.base.check_dim(x)?;
        let offset = x - &self.base;
        let mut p = self.base.clone();
        for q in &self.onb {
            let c = q.dot(&offset)?;
            p.axpy(c, q);
        }
        Ok(p)
    }

    /// Reflection `R_V x = 2 P_V x − x`.
    pub fn reflect(&self, x: &Vector<T>) -> Result<Vector<T>> {
        let p = self.project(x)?;
        Ok(&p * T::lit(2.0) - x)
    }

    pub fn distance(&self, x: &Vector<T>) -> Result<T> {
        Ok(self.project(x)?.distance(x))
    }

    pub fn contains(&self, x: &Vector<T>, tol: T) -> Result<bool> {
        Ok(self.distance(x)? <= tol * (T::one() + x.norm()))
    }
}

/// Affine hull `x_1 + span{x_i − x_1}` of a point set.
pub fn affine_hull<T: Scalar>(set: &PointSet<T>, tol: T) -> AffineSubspace<T> {
    let pts = set.points();
    let base = pts[0].clone();
    let diffs: Vec<Vector<T>> = pts[1..].iter().map(|p| p - &base).collect();
    AffineSubspace::from_span(base, &diffs, tol).expect("points share one dimension")
}

fn check_ambient<T: Scalar>(u: &AffineSubspace<T>, v: &AffineSubspace<T>) -> Result<()> {
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: u.ambient_dim(),
            found: v.ambient_dim(),
        });
    }
    Ok(())
}

/// Orthonormal basis of `M_U ∩ M_V` as the complement of `M_U^⊥ + M_V^⊥`.
fn linear_intersection<T: Scalar>(normals_u: &[Vector<T>], normals_v: &[Vector<T>], dim: usize, tol: T) -> Vec<Vector<T>> {
    let stacked: Vec<Vector<T>> = normals_u.iter().chain(normals_v).cloned().collect();
    let normals = orthonormalize(&stacked, tol).expect("normals share one dimension");
    complement_basis(&normals, dim).expect("normals match ambient dimension")
}

/// Intersection of two affine subspaces.
///
/// The common point is the least-squares solution of the stacked normal
/// constraints `N_Uᵀ (p − u) = 0`, `N_Vᵀ (p − v) = 0`; the intersection is
/// rejected with [`Error::NoIntersection`] when that point misses either set
/// by more than `tol · (1 + max(‖u‖, ‖v‖))`.
pub fn intersect<T: Scalar>(u: &AffineSubspace<T>, v: &AffineSubspace<T>, tol: T) -> Result<AffineSubspace<T>> {
    check_ambient(u, v)?;
    let n = u.ambient_dim();
    let nu = u.normal_basis();
    let nv = v.normal_basis();
    let onb = linear_intersection(&nu, &nv, n, tol);

    let rows: Vec<Vec<T>> = nu.iter().chain(&nv).map(|q| q.as_slice().to_vec()).collect();
    let rhs: Vector<T> = nu
        .iter()
        .map(|q| q.dot(u.base()).unwrap())
        .chain(nv.iter().map(|q| q.dot(v.base()).unwrap()))
        .collect();
    let point = if rows.is_empty() {
        u.base().clone()
    } else {
        let a = Matrix::from_rows(&rows)?;
        let qr = PivotedQr::factor(&a, tol);
        qr.solve_least_squares(&rhs)?.0
    };
    let residual = u.distance(&point)?.max(v.distance(&point)?);
    let scale = T::one() + u.base().norm().max(v.base().norm());
    if !(residual <= tol * scale) {
        return Err(Error::NoIntersection {
            residual: residual.to_f64().unwrap_or(f64::INFINITY),
        });
    }
    Ok(AffineSubspace { base: point, onb })
}

/// Intersection of all `subspaces`, folded pairwise.
pub fn intersect_all<T: Scalar>(subspaces: &[AffineSubspace<T>], tol: T) -> Result<AffineSubspace<T>> {
    let (first, rest) = subspaces
        .split_first()
        .ok_or(Error::EmptyInput("no subspaces to intersect"))?;
    rest.iter().try_fold(first.clone(), |acc, s| intersect(&acc, s, tol))
}

/// Orthonormal basis of `M ∩ W^⊥` for `W ⊂ M`, expressed through `M`'s basis.
fn deflate<T: Scalar>(onb: &[Vector<T>], shared: &[Vector<T>], tol: T) -> Vec<Vector<T>> {
    let k = onb.len();
    if k == 0 {
        return Vec::new();
    }
    let coords: Vec<Vector<T>> = shared
        .iter()
        .map(|w| onb.iter().map(|q| q.dot(w).unwrap()).collect())
        .collect();
    let coords = orthonormalize(&coords, tol).unwrap_or_default();
    let rest = complement_basis(&coords, k).expect("coordinates live in R^k");
    rest.iter()
        .map(|c| {
            let mut v = Vector::zeros(onb[0].dim());
            for (ci, q) in c.iter().zip(onb) {
                v.axpy(*ci, q);
            }
            v
        })
        .collect()
}

/// Cosine of the Friedrichs angle between the linear parts of `u` and `v`:
/// the largest singular value of `Q_U'ᵀ Q_V'` after removing the shared
/// directions from both bases. Zero when either deflated space is trivial.
pub fn friedrichs_cos<T: Scalar>(u: &AffineSubspace<T>, v: &AffineSubspace<T>) -> Result<T> {
    check_ambient(u, v)?;
    let tol = T::lit(INTERSECTION_TOL);
    let n = u.ambient_dim();
    let shared = linear_intersection(&u.normal_basis(), &v.normal_basis(), n, tol);
    let qu = deflate(u.basis(), &shared, tol);
    let qv = deflate(v.basis(), &shared, tol);
    if qu.is_empty() || qv.is_empty() {
        return Ok(T::zero());
    }
    let mut cross = Matrix::zeros(qu.len(), qv.len());
    for (i, a) in qu.iter().enumerate() {
        for (j, b) in qv.iter().enumerate() {
            cross[(i, j)] = a.dot(b)?;
        }
    }
    let top = singular_values(&cross)[0];
    Ok(top.max(T::zero()).min(T::one()))
}
