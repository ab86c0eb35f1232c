use crate::affine::{intersect_all, AffineSubspace, INTERSECTION_TOL};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::Vector;

/// Best-approximation problem: find the point of `∩ U_i` closest to `z`.
///
/// The intersection and its projection of `z` are computed once at
/// construction and serve as the reference solution of every run.
#[derive(Debug, Clone)]
pub struct Problem<T> {
    subspaces: Vec<AffineSubspace<T>>,
    z: Vector<T>,
    intersection: AffineSubspace<T>,
    solution: Vector<T>,
}

impl<T: Scalar> Problem<T> {
    pub fn new(subspaces: Vec<AffineSubspace<T>>, z: Vector<T>) -> Result<Self> {
        if subspaces.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a problem needs at least two subspaces, got {}",
                subspaces.len()
            )));
        }
        let dim = z.dim();
        if let Some(s) = subspaces.iter().find(|s| s.ambient_dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: s.ambient_dim(),
            });
        }
        let intersection = intersect_all(&subspaces, T::lit(INTERSECTION_TOL))?;
        let solution = intersection.project(&z)?;
        Ok(Self {
            subspaces,
            z,
            intersection,
            solution,
        })
    }

    pub fn dim(&self) -> usize {
        self.z.dim()
    }

    pub fn subspaces(&self) -> &[AffineSubspace<T>] {
        &self.subspaces
    }

    pub fn z(&self) -> &Vector<T> {
        &self.z
    }

    pub fn intersection(&self) -> &AffineSubspace<T> {
        &self.intersection
    }

    /// `P_{∩U_i} z`.
    pub fn solution(&self) -> &Vector<T> {
        &self.solution
    }

    /// `max_i dist(x, U_i)`.
    pub fn residual(&self, x: &Vector<T>) -> T {
        self.subspaces
            .iter()
            .map(|s| s.distance(x).expect("dimension checked at construction"))
            .fold(T::zero(), T::max)
    }
}
