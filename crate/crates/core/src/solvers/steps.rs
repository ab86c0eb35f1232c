//! One-step operators of the circumcentered reflection methods and the
//! classical baselines.

use crate::affine::AffineSubspace;
use crate::circumcenter::{circumcenter, CircumConfig, CircumOutcome, PointSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::Vector;

/// `{x, R_1 x, R_2 R_1 x, …, R_m ⋯ R_1 x}`.
pub fn reflection_chain<T: Scalar>(subspaces: &[AffineSubspace<T>], x: &Vector<T>) -> Result<PointSet<T>> {
    let mut points = Vec::with_capacity(subspaces.len() + 1);
    points.push(x.clone());
    let mut current = x.clone();
    for s in subspaces {
        current = s.reflect(&current)?;
        points.push(current.clone());
    }
    PointSet::new(points)
}

fn center_of<T: Scalar>(chain: &PointSet<T>, cfg: &CircumConfig<T>) -> Result<Vector<T>> {
    match circumcenter(chain, cfg) {
        CircumOutcome::Exists { center, .. } => Ok(center),
        CircumOutcome::Empty => Err(Error::DegenerateStep { iteration: 0 }),
    }
}

/// C-DRM step: circumcenter of `{x, R_U x, R_V R_U x}`.
pub fn cdrm_step<T: Scalar>(
    u: &AffineSubspace<T>,
    v: &AffineSubspace<T>,
    x: &Vector<T>,
    cfg: &CircumConfig<T>,
) -> Result<Vector<T>> {
    let chain = reflection_chain(&[u.clone(), v.clone()], x)?;
    center_of(&chain, cfg)
}

/// CRM step: circumcenter of the successive reflections of `x` through every subspace.
pub fn crm_step<T: Scalar>(subspaces: &[AffineSubspace<T>], x: &Vector<T>, cfg: &CircumConfig<T>) -> Result<Vector<T>> {
    if subspaces.len() < 2 {
        return Err(Error::InvalidArgument("CRM needs at least two subspaces".into()));
    }
    let chain = reflection_chain(subspaces, x)?;
    center_of(&chain, cfg)
}

/// Douglas–Rachford operator `T x = x − P_U x + P_V (2 P_U x − x)`.
pub fn dr_step<T: Scalar>(u: &AffineSubspace<T>, v: &AffineSubspace<T>, x: &Vector<T>) -> Result<Vector<T>> {
    let pu = u.project(x)?;
    let reflected = &pu * T::lit(2.0) - x;
    let pv = v.project(&reflected)?;
    Ok(x - &pu + &pv)
}

/// One sweep of cyclic projections `P_m ∘ ⋯ ∘ P_1`.
pub fn map_step<T: Scalar>(subspaces: &[AffineSubspace<T>], x: &Vector<T>) -> Result<Vector<T>> {
    if subspaces.len() < 2 {
        return Err(Error::InvalidArgument("cyclic projections need at least two subspaces".into()));
    }
    subspaces.iter().try_fold(x.clone(), |acc, s| s.project(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::intersect;

    fn v(x: &[f64]) -> Vector<f64> {
        Vector::from_f64(x)
    }

    fn line(angle: f64) -> AffineSubspace<f64> {
        AffineSubspace::linear(2, &[v(&[angle.cos(), angle.sin()])], 1e-12).unwrap()
    }

    #[test]
    fn cdrm_fixed_point() {
        let u = line(0.0);
        let w = AffineSubspace::linear(2, &[v(&[1.0, 0.0])], 1e-12).unwrap();
        let x = v(&[3.0, 0.0]);
        assert_eq!(cdrm_step(&u, &w, &x, &CircumConfig::default()).unwrap(), x);
    }

    #[test]
    fn cdrm_two_lines_in_one_step() {
        let (u, w) = (line(0.3), line(1.4));
        let x = v(&[2.0, -0.7]);
        let next = cdrm_step(&u, &w, &x, &CircumConfig::default()).unwrap();
        assert!(next.norm() < 1e-12, "{next:?}");
    }

    #[test]
    fn cdrm_equal_sets_gives_projection() {
        let u = line(0.7);
        let x = v(&[1.0, 3.0]);
        let next = cdrm_step(&u, &u, &x, &CircumConfig::default()).unwrap();
        assert!(next.distance(&u.project(&x).unwrap()) < 1e-14);
    }

    #[test]
    fn crm_with_two_sets_matches_cdrm() {
        let e = |k| Vector::<f64>::unit(3, k);
        let a = AffineSubspace::linear(3, &[e(0), e(1)], 1e-12).unwrap();
        let b = AffineSubspace::linear(3, &[v(&[1.0, 0.0, 1.0]), e(1)], 1e-12).unwrap();
        let x = v(&[0.5, -1.0, 2.0]);
        let cfg = CircumConfig::default();
        let c1 = cdrm_step(&a, &b, &x, &cfg).unwrap();
        let c2 = crm_step(&[a, b], &x, &cfg).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn crm_on_coordinate_hyperplanes_does_not_move_away() {
        let e = |k| Vector::<f64>::unit(3, k);
        let planes = vec![
            AffineSubspace::linear(3, &[e(1), e(2)], 1e-12).unwrap(),
            AffineSubspace::linear(3, &[e(0), e(2)], 1e-12).unwrap(),
            AffineSubspace::linear(3, &[e(0), e(1)], 1e-12).unwrap(),
        ];
        let x = v(&[1.0, 1.0, 1.0]);
        let sol = Vector::zeros(3);
        let next = crm_step(&planes, &x, &CircumConfig::default()).unwrap();
        assert!(next.distance(&sol) <= x.distance(&sol));
        let inside = Vector::zeros(3);
        assert_eq!(crm_step(&planes, &inside, &CircumConfig::default()).unwrap(), inside);
    }

    #[test]
    fn dr_examples() {
        let u = line(0.0);
        let w = line(0.9);
        let origin = Vector::zeros(2);
        assert_eq!(dr_step(&u, &w, &origin).unwrap(), origin);
        let x = v(&[1.3, -0.4]);
        // with U = V every point is fixed; the shadow P_U x is already the solution
        assert!(dr_step(&u, &u, &x).unwrap().distance(&x) < 1e-15);
        // x on U: |T x| = cos(theta) |x|
        let x = v(&[2.0, 0.0]);
        let tx = dr_step(&u, &w, &x).unwrap();
        assert!((tx.norm() - 0.9_f64.cos() * 2.0).abs() < 1e-14);
    }

    #[test]
    fn map_examples() {
        let (u, w) = (line(0.0), line(std::f64::consts::FRAC_PI_2));
        let x = v(&[3.0, 4.0]);
        assert!(map_step(&[u.clone(), w], &x).unwrap().norm() < 1e-15);
        let theta = 0.6;
        let w = line(theta);
        let x = v(&[1.0, 1.0]);
        // after the first sweep the iterate sits on W; each further sweep scales by cos^2
        let x1 = map_step(&[u.clone(), w.clone()], &x).unwrap();
        let x2 = map_step(&[u.clone(), w.clone()], &x1).unwrap();
        assert!((x2.norm() / x1.norm() - theta.cos().powi(2)).abs() < 1e-14);
        let i = intersect(&u, &w, 1e-8).unwrap();
        assert_eq!(i.dim(), 0);
    }
}
