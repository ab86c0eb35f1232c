//! Circumcenter and circumradius of a triangle in R^3 through the cross product.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::Vector;

fn require_r3<T: Scalar>(v: &Vector<T>) -> Result<()> {
    if v.dim() != 3 {
        return Err(Error::NotThreeDimensional(v.dim()));
    }
    Ok(())
}

/// `a × b` in R^3.
pub fn cross3<T: Scalar>(a: &Vector<T>, b: &Vector<T>) -> Result<Vector<T>> {
    require_r3(a)?;
    require_r3(b)?;
    Ok(Vector::new(vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]))
}

/// Edge vectors `a = y − x`, `b = z − x` and `a × b`, rejecting degenerate triangles.
fn edges<T: Scalar>(x: &Vector<T>, y: &Vector<T>, z: &Vector<T>) -> Result<(Vector<T>, Vector<T>, Vector<T>)> {
    require_r3(x)?;
    require_r3(y)?;
    require_r3(z)?;
    let a = y - x;
    let b = z - x;
    let axb = cross3(&a, &b)?;
    // ‖a × b‖ = ‖a‖‖b‖ sin θ
    if !(axb.norm() > T::default_rank_tol() * a.norm() * b.norm()) {
        return Err(Error::NotAffinelyIndependent);
    }
    Ok((a, b, axb))
}

/// `x + ((‖a‖² b − ‖b‖² a) × (a × b)) / (2 ‖a × b‖²)`.
pub fn circumcenter_cross3<T: Scalar>(x: &Vector<T>, y: &Vector<T>, z: &Vector<T>) -> Result<Vector<T>> {
    let (a, b, axb) = edges(x, y, z)?;
    let lever = &b * a.norm_squared() - &a * b.norm_squared();
    let offset = cross3(&lever, &axb)?;
    let mut center = x.clone();
    center.axpy(T::one() / (T::lit(2.0) * axb.norm_squared()), &offset);
    Ok(center)
}

/// `‖a‖ ‖b‖ ‖a − b‖ / (2 ‖a × b‖)`.
pub fn circumradius_cross3<T: Scalar>(x: &Vector<T>, y: &Vector<T>, z: &Vector<T>) -> Result<T> {
    let (a, b, axb) = edges(x, y, z)?;
    Ok(a.norm() * b.norm() * (&a - &b).norm() / (T::lit(2.0) * axb.norm()))
}
