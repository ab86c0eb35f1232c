use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::affine::AffineSubspace;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solvers::Problem;
use crate::vecspace::{orthonormalize, Vector};

/// Seeded generator used by every randomized construction in this crate:
/// xoshiro256++ (a 64-bit xorshift-family generator) seeded through SplitMix64.
pub fn seeded_rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

pub fn gaussian_vector<T: Scalar>(rng: &mut Xoshiro256PlusPlus, dim: usize) -> Vector<T> {
    (0..dim)
        .map(|_| T::lit(StandardNormal.sample(rng)))
        .collect()
}

/// Haar-like random orthonormal basis of R^n (Gram–Schmidt on Gaussian vectors).
pub fn random_orthonormal_basis<T: Scalar>(rng: &mut Xoshiro256PlusPlus, n: usize) -> Vec<Vector<T>> {
    loop {
        let raw: Vec<Vector<T>> = (0..n).map(|_| gaussian_vector(rng, n)).collect();
        let q = orthonormalize(&raw, T::lit(1e-6)).expect("equal dimensions");
        if q.len() == n {
            return q;
        }
    }
}

/// Number of directions the generated subspaces share.
pub fn planted_intersection_dim(dim_u: usize, dim_v: usize) -> usize {
    dim_u.min(dim_v) / 2
}

/// Two affine subspaces of R^n with prescribed Friedrichs angle cosine.
///
/// In a random orthonormal frame `q_0, …, q_{n-1}`, `U` and `V` share
/// `min(dim_u, dim_v) / 2` directions. Each remaining direction of the smaller
/// pairing is a plane `span{q_i, q_{i+1}}` in which `U` takes `q_i` and `V`
/// takes `cos θ q_i + sin θ q_{i+1}`. The first pair uses `cos θ = target_cf`,
/// the others draw `cos θ` uniformly from `[0, target_cf)`, so `target_cf` is
/// the largest cosine among the nonzero principal angles. Leftover dimensions
/// get fresh orthogonal frame vectors. Both sets pass through a common random
/// point, and `z` is Gaussian.
pub fn generate_two_subspace<T: Scalar>(
    n: usize,
    dim_u: usize,
    dim_v: usize,
    target_cf: f64,
    seed: u64,
) -> Result<Problem<T>> {
    if !(0.0..1.0).contains(&target_cf) {
        return Err(Error::InvalidArgument(format!("target c_F must lie in [0, 1), got {target_cf}")));
    }
    if dim_u == 0 || dim_v == 0 {
        return Err(Error::InvalidArgument("subspace dimensions must be positive".into()));
    }
    let shared = planted_intersection_dim(dim_u, dim_v);
    let needed = dim_u + dim_v - shared;
    if needed > n {
        return Err(Error::InvalidArgument(format!(
            "dimensions {dim_u} and {dim_v} need an ambient dimension of at least {needed}, got {n}"
        )));
    }
    let pairs = dim_u.min(dim_v) - shared;

    let mut rng = seeded_rng(seed);
    let frame: Vec<Vector<T>> = random_orthonormal_basis(&mut rng, n);
    let cosines: Vec<f64> = if target_cf == 0.0 {
        vec![0.0; pairs]
    } else {
        let spread = Uniform::new(0.0, target_cf).expect("nonempty range");
        std::iter::once(target_cf)
            .chain((1..pairs).map(|_| spread.sample(&mut rng)))
            .collect()
    };

    let mut u_dirs: Vec<Vector<T>> = frame[..shared].to_vec();
    let mut v_dirs: Vec<Vector<T>> = frame[..shared].to_vec();
    let mut next = shared;
    for &c in &cosines {
        let s = (1.0 - c * c).sqrt();
        let (a, b) = (&frame[next], &frame[next + 1]);
        u_dirs.push(a.clone());
        v_dirs.push(&(a * T::lit(c)) + &(b * T::lit(s)));
        next += 2;
    }
    for _ in dim_u.min(dim_v)..dim_u {
        u_dirs.push(frame[next].clone());
        next += 1;
    }
    for _ in dim_u.min(dim_v)..dim_v {
        v_dirs.push(frame[next].clone());
        next += 1;
    }

    let anchor: Vector<T> = gaussian_vector(&mut rng, n);
    let z = &anchor + &gaussian_vector(&mut rng, n);
    let tol = T::default_rank_tol();
    let u = AffineSubspace::from_span(anchor.clone(), &u_dirs, tol)?;
    let v = AffineSubspace::from_span(anchor, &v_dirs, tol)?;
    Problem::new(vec![u, v], z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::friedrichs_cos;

    #[test]
    fn lines_at_sixty_degrees() {
        let p = generate_two_subspace::<f64>(2, 1, 1, 0.5, 3).unwrap();
        let [u, v] = p.subspaces() else { panic!() };
        assert_eq!((u.dim(), v.dim()), (1, 1));
        let c = u.basis()[0].dot(&v.basis()[0]).unwrap().abs();
        assert!((c - 0.5).abs() < 1e-12);
        assert!((friedrichs_cos(u, v).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_construction() {
        let p = generate_two_subspace::<f64>(12, 4, 5, 0.0, 1).unwrap();
        let [u, v] = p.subspaces() else { panic!() };
        assert!(friedrichs_cos(u, v).unwrap() < 1e-12);
        assert_eq!(p.intersection().dim(), 2);
    }

    #[test]
    fn planted_cosine_in_fifty_dimensions() {
        let p = generate_two_subspace::<f64>(50, 10, 10, 0.8, 7).unwrap();
        let [u, v] = p.subspaces() else { panic!() };
        assert!((friedrichs_cos(u, v).unwrap() - 0.8).abs() < 1e-8);
        assert_eq!(p.intersection().dim(), 5);
    }

    #[test]
    fn same_seed_same_problem() {
        let a = generate_two_subspace::<f64>(20, 6, 4, 0.9, 11).unwrap();
        let b = generate_two_subspace::<f64>(20, 6, 4, 0.9, 11).unwrap();
        assert_eq!(a.subspaces(), b.subspaces());
        assert_eq!(a.z(), b.z());
    }

    #[test]
    fn infeasible_dimensions() {
        assert!(generate_two_subspace::<f64>(5, 4, 4, 0.5, 0).is_err());
        assert!(generate_two_subspace::<f64>(5, 2, 2, 1.0, 0).is_err());
        assert!(generate_two_subspace::<f64>(5, 0, 2, 0.5, 0).is_err());
    }
}
