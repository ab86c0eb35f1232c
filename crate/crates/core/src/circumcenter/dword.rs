//! Double-word arithmetic (an unevaluated sum `hi + lo`), giving roughly twice
//! the working precision for the determinant ratios.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DWord<T> {
    hi: T,
    lo: T,
}

fn two_sum<T: Scalar>(a: T, b: T) -> DWord<T> {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    DWord { hi: s, lo: err }
}

fn quick_two_sum<T: Scalar>(a: T, b: T) -> DWord<T> {
    let s = a + b;
    DWord { hi: s, lo: b - (s - a) }
}

fn two_prod<T: Scalar>(a: T, b: T) -> DWord<T> {
    let p = a * b;
    DWord { hi: p, lo: a.mul_add(b, -p) }
}

impl<T: Scalar> DWord<T> {
    pub(crate) fn from(x: T) -> Self {
        DWord { hi: x, lo: T::zero() }
    }

    pub(crate) fn zero() -> Self {
        Self::from(T::zero())
    }

    pub(crate) fn one() -> Self {
        Self::from(T::one())
    }

    /// Exact difference of two working-precision numbers.
    pub(crate) fn diff(a: T, b: T) -> Self {
        two_sum(a, -b)
    }

    pub(crate) fn to_scalar(self) -> T {
        self.hi + self.lo
    }

    pub(crate) fn magnitude(self) -> T {
        self.hi.abs()
    }
}

impl<T: Scalar> Add for DWord<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let v = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(v.hi, v.lo + t.lo)
    }
}

impl<T: Scalar> Neg for DWord<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DWord {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl<T: Scalar> Sub for DWord<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Mul for DWord<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let p = two_prod(self.hi, o.hi);
        let lo = p.lo + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p.hi, lo)
    }
}

impl<T: Scalar> Div for DWord<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self - o * Self::from(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Self::from(q2);
        let q3 = r.hi / o.hi;
        quick_two_sum(q1, q2) + Self::from(q3)
    }
}

/// Determinant by partial-pivoting elimination, entirely in double-word arithmetic.
pub(crate) fn determinant<T: Scalar>(mut a: Vec<Vec<DWord<T>>>) -> DWord<T> {
    let n = a.len();
    let mut det = DWord::one();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[x][k].magnitude().partial_cmp(&a[y][k].magnitude()).unwrap())
            .unwrap();
        if a[p][k].hi == T::zero() {
            return DWord::zero();
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k];
        det = det * pivot;
        for i in k + 1..n {
            let f = a[i][k] / pivot;
            for j in k + 1..n {
                a[i][j] = a[i][j] - f * a[k][j];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_bits() {
        let a = DWord::from(1.0f64) + DWord::from(1e-20);
        let b = a - DWord::from(1.0);
        assert_eq!(b.to_scalar(), 1e-20);
        let third = DWord::one() / DWord::from(3.0f64);
        let back = third * DWord::from(3.0);
        assert!((back - DWord::one()).to_scalar().abs() < 1e-30);
    }

    #[test]
    fn small_determinant() {
        let m = |x: f64| DWord::from(x);
        let a = vec![vec![m(2.0), m(1.0)], vec![m(1.0), m(3.0)]];
        assert_eq!(determinant(a).to_scalar(), 5.0);
    }
}
