use crate::scalar::Scalar;
use crate::vecspace::Vector;

use super::general::dedup;
use super::types::{CircumConfig, CircumOutcome, PointSet};

/// Closed-form circumcenter of three points, split on how many are distinct.
///
/// With three distinct affinely independent points this is
///
/// ```text
/// (‖y−z‖²⟨x−z,x−y⟩x + ‖x−z‖²⟨y−z,y−x⟩y + ‖x−y‖²⟨z−x,z−y⟩z)
///     / (2(‖y−x‖²‖z−x‖² − ⟨y−x,z−x⟩²))
/// ```
///
/// Two distinct points give their midpoint, one gives itself.
///
/// Panics when the three points do not share a dimension.
pub fn circumcenter_three<T: Scalar>(
    x: &Vector<T>,
    y: &Vector<T>,
    z: &Vector<T>,
    cfg: &CircumConfig<T>,
) -> CircumOutcome<T> {
    let listed = PointSet::new(vec![x.clone(), y.clone(), z.clone()]).expect("three points in one space");
    let distinct = dedup(&listed, cfg.merge_distance(&listed)).into_points();
    match distinct.as_slice() {
        [p] => CircumOutcome::Exists {
            center: p.clone(),
            radius: T::zero(),
        },
        [u, v] => {
            let center = (u + v) * T::lit(0.5);
            let radius = u.distance(v) * T::lit(0.5);
            CircumOutcome::Exists { center, radius }
        }
        [x, y, z] => three_distinct(x, y, z, cfg.rank_tol),
        _ => unreachable!("dedup of three points"),
    }
}

fn three_distinct<T: Scalar>(x: &Vector<T>, y: &Vector<T>, z: &Vector<T>, rank_tol: T) -> CircumOutcome<T> {
    let a = y - x;
    let b = z - x;
    let aa = a.norm_squared();
    let bb = b.norm_squared();
    let ab = a.dot(&b).unwrap();
    // ‖a‖²‖b‖² − ⟨a,b⟩² = ‖a‖² · ‖b − (⟨a,b⟩/‖a‖²) a‖², evaluated without cancellation
    let mut r = b.clone();
    r.axpy(-ab / aa, &a);
    let rr = r.norm_squared();
    let scale = aa.max(bb).sqrt();
    if !(rr.sqrt() > rank_tol * scale) {
        return CircumOutcome::Empty;
    }
    let denom = T::lit(2.0) * aa * rr;

    let yz = y - z;
    let xz = x - z;
    let xy = x - y;
    let wx = yz.norm_squared() * xz.dot(&xy).unwrap();
    let wy = xz.norm_squared() * yz.dot(&(-&xy)).unwrap();
    let wz = xy.norm_squared() * xz.dot(&yz).unwrap();
    let mut center = x * (wx / denom);
    center.axpy(wy / denom, y);
    center.axpy(wz / denom, z);
    let radius = [x, y, z].iter().map(|p| center.distance(p)).sum::<T>() / T::lit(3.0);
    CircumOutcome::Exists { center, radius }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(x: &[f64]) -> Vector<f64> {
        Vector::from_f64(x)
    }

    #[test]
    fn right_triangle() {
        let out = circumcenter_three(&v(&[0.0, 0.0]), &v(&[2.0, 0.0]), &v(&[0.0, 2.0]), &CircumConfig::default());
        let c = out.center().unwrap();
        assert_abs_diff_eq!(c[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c[1], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(out.radius(), 2.0_f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn two_distinct_points_give_midpoint() {
        let out = circumcenter_three(&v(&[-2.0, 0.0]), &v(&[2.0, 0.0]), &v(&[2.0, 0.0]), &CircumConfig::default());
        assert_eq!(
            out,
            CircumOutcome::Exists {
                center: v(&[0.0, 0.0]),
                radius: 2.0
            }
        );
    }

    #[test]
    fn single_point() {
        let p = v(&[1.0, 2.0, 3.0]);
        let out = circumcenter_three(&p, &p, &p, &CircumConfig::default());
        assert_eq!(out, CircumOutcome::Exists { center: p, radius: 0.0 });
    }

    #[test]
    fn collinear_is_empty() {
        let out = circumcenter_three(&v(&[0.0, 0.0]), &v(&[1.0, 0.0]), &v(&[3.0, 0.0]), &CircumConfig::default());
        assert_eq!(out, CircumOutcome::Empty);
    }

    #[test]
    fn formula_is_symmetric_in_its_arguments() {
        let (x, y, z) = (v(&[0.3, -1.0, 2.0]), v(&[1.5, 0.2, -0.7]), v(&[-0.4, 2.2, 0.9]));
        let cfg = CircumConfig::default();
        let c1 = circumcenter_three(&x, &y, &z, &cfg).into_center().unwrap();
        let c2 = circumcenter_three(&z, &x, &y, &cfg).into_center().unwrap();
        let c3 = circumcenter_three(&y, &z, &x, &cfg).into_center().unwrap();
        assert!(c1.distance(&c2) < 1e-13);
        assert!(c1.distance(&c3) < 1e-13);
    }
}
