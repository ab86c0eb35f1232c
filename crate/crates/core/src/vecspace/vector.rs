use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense real column vector.
///
/// Arithmetic operators panic on dimension mismatch; the checked entry
/// points ([`Vector::dot`], [`Vector::try_new`]) return [`Error`] instead.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> Vector<T> {
    /// Wraps `entries` without validation.
    pub fn new(entries: Vec<T>) -> Self {
        Self { entries }
    }

    /// Wraps `entries`, rejecting empty input and non-finite values.
    pub fn try_new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput("vector has no entries"));
        }
        if let Some(index) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { entries })
    }

    pub fn from_f64(entries: &[f64]) -> Self {
        Self::new(entries.iter().map(|&v| T::lit(v)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![T::zero(); dim])
    }

    /// The `index`-th standard basis vector of R^dim.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = T::one();
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.entries
    }

    pub fn into_vec(self) -> Vec<T> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|v| v.is_finite())
    }

    /// Checked inner product.
    pub fn dot(&self, other: &Self) -> Result<T> {
        self.check_dim(other)?;
        Ok(inner(&self.entries, &other.entries))
    }

    pub fn norm_squared(&self) -> T {
        inner(&self.entries, &self.entries)
    }

    pub fn norm(&self) -> T {
        self.norm_squared().sqrt()
    }

    /// Euclidean distance; panics on dimension mismatch.
    pub fn distance(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a - b) * (a - b))
            .sum::<T>()
            .sqrt()
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self::new(self.entries.iter().map(|&v| v * factor).collect())
    }

    /// `self += alpha * x`
    pub fn axpy(&mut self, alpha: T, x: &Self) {
        assert_eq!(self.dim(), x.dim(), "dimension mismatch");
        for (a, &b) in self.entries.iter_mut().zip(&x.entries) {
            *a = *a + alpha * b;
        }
    }

    pub fn max_abs(&self) -> T {
        self.entries.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub(crate) fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn inner<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.entries[i]
    }
}

impl<T: Scalar> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<T: Scalar> From<Vec<T>> for Vector<T> {
    fn from(entries: Vec<T>) -> Self {
        Self::new(entries)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<T: Scalar> $trait<&Vector<T>> for &Vector<T> {
            type Output = Vector<T>;
            fn $method(self, rhs: &Vector<T>) -> Vector<T> {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a $op b).collect()
            }
        }
        impl<T: Scalar> $trait<Vector<T>> for Vector<T> {
            type Output = Vector<T>;
            fn $method(self, rhs: Vector<T>) -> Vector<T> {
                &self $op &rhs
            }
        }
        impl<T: Scalar> $trait<&Vector<T>> for Vector<T> {
            type Output = Vector<T>;
            fn $method(self, rhs: &Vector<T>) -> Vector<T> {
                &self $op rhs
            }
        }
        impl<T: Scalar> $trait<Vector<T>> for &Vector<T> {
            type Output = Vector<T>;
            fn $method(self, rhs: Vector<T>) -> Vector<T> {
                self $op &rhs
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);

impl<T: Scalar> AddAssign<&Vector<T>> for Vector<T> {
    fn add_assign(&mut self, rhs: &Vector<T>) {
        self.axpy(T::one(), rhs);
    }
}

impl<T: Scalar> SubAssign<&Vector<T>> for Vector<T> {
    fn sub_assign(&mut self, rhs: &Vector<T>) {
        self.axpy(-T::one(), rhs);
    }
}

impl<T: Scalar> Mul<T> for &Vector<T> {
    type Output = Vector<T>;
    fn mul(self, rhs: T) -> Vector<T> {
        self.scaled(rhs)
    }
}

impl<T: Scalar> Mul<T> for Vector<T> {
    type Output = Vector<T>;
    fn mul(mut self, rhs: T) -> Vector<T> {
        for v in &mut self.entries {
            *v = *v * rhs;
        }
        self
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        self.entries.iter().map(|&v| -v).collect()
    }
}

impl<T: Scalar> Neg for Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        -&self
    }
}
