use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::Vector;

/// Ordered, nonempty list of points sharing one dimension. Repeated points
/// are allowed; [`super::dedup`] turns the list into a set.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<T> {
    points: Vec<Vector<T>>,
}

impl<T: Scalar> PointSet<T> {
    pub fn new(points: Vec<Vector<T>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput("point set is empty"))?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::EmptyInput("points have dimension zero"));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Self { points })
    }

    /// Convenience constructor from `f64` coordinates.
    pub fn from_f64(points: &[&[f64]]) -> Result<Self> {
        Self::new(points.iter().map(|p| Vector::from_f64(p)).collect())
    }

    pub fn points(&self) -> &[Vector<T>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Vector<T>> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> T {
        let mut d = T::zero();
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[..i] {
                d = d.max(p.distance(q));
            }
        }
        d
    }

    /// The set `S + y`.
    pub fn translated(&self, y: &Vector<T>) -> Self {
        Self {
            points: self.points.iter().map(|p| p + y).collect(),
        }
    }

    /// The set `λ S`.
    pub fn scaled(&self, lambda: T) -> Self {
        Self {
            points: self.points.iter().map(|p| p * lambda).collect(),
        }
    }
}

/// Value of the circumcenter operator: a center with its radius, or the empty set.
#[derive(Debug, Clone, PartialEq)]
pub enum CircumOutcome<T> {
    Exists { center: Vector<T>, radius: T },
    Empty,
}

impl<T: Scalar> CircumOutcome<T> {
    pub fn center(&self) -> Option<&Vector<T>> {
        match self {
            Self::Exists { center, .. } => Some(center),
            Self::Empty => None,
        }
    }

    /// Circumradius; `+∞` for the empty outcome.
    pub fn radius(&self) -> T {
        match self {
            Self::Exists { radius, .. } => *radius,
            Self::Empty => T::infinity(),
        }
    }

    pub fn exists(&self) -> bool {
        matches!(self, Self::Exists { .. })
    }

    pub fn into_center(self) -> Option<Vector<T>> {
        match self {
            Self::Exists { center, .. } => Some(center),
            Self::Empty => None,
        }
    }
}

/// Tolerances of the circumcenter computation.
///
/// * `rank_tol`: relative threshold for the affine-independence decisions.
/// * `verify_tol`: relative spread allowed among the candidate's distances.
/// * `dedup_tol`: points closer than `dedup_tol · (1 + diam S)` are merged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumConfig<T> {
    pub rank_tol: T,
    pub verify_tol: T,
    pub dedup_tol: T,
}

impl<T: Scalar> Default for CircumConfig<T> {
    fn default() -> Self {
        Self {
            rank_tol: T::default_rank_tol(),
            verify_tol: T::default_verify_tol(),
            dedup_tol: T::default_dedup_tol(),
        }
    }
}

impl<T: Scalar> CircumConfig<T> {
    pub fn new(rank_tol: T, verify_tol: T, dedup_tol: T) -> Result<Self> {
        if !(rank_tol > T::zero() && verify_tol > T::zero() && dedup_tol > T::zero()) {
            return Err(Error::InvalidArgument("tolerances must be positive".into()));
        }
        Ok(Self {
            rank_tol,
            verify_tol,
            dedup_tol,
        })
    }

    pub fn with_verify_tol(mut self, verify_tol: T) -> Self {
        self.verify_tol = verify_tol;
        self
    }

    /// Absolute merge distance for `set`.
    pub(crate) fn merge_distance(&self, set: &PointSet<T>) -> T {
        self.dedup_tol * (T::one() + set.diameter())
    }
}
