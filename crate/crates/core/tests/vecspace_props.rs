use circum::vecspace::{det_via_factorization, gram, lu_determinant, max_independent_subset, orthonormalize, solve_spd};
use circum::{Matrix64, Vector64};
use proptest::prelude::*;

fn vectors(max_count: usize, dim: usize) -> impl Strategy<Value = Vec<Vector64>> {
    prop::collection::vec(prop::collection::vec(-10.0f64..10.0, dim), 1..=max_count)
        .prop_map(|rows| rows.into_iter().map(Vector64::from).collect())
}

/// Rank by brute-force elimination with partial pivoting on a copy.
fn rank_oracle(vs: &[Vector64], tol: f64) -> usize {
    let mut rows: Vec<Vec<f64>> = vs.iter().map(|v| v.as_slice().to_vec()).collect();
    let scale = rows.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else {
            break;
        };
        if rows[p][c].abs() <= tol * scale {
            continue;
        }
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            let f = rows[r][c] / rows[rank][c];
            for j in c..cols {
                rows[r][j] -= f * rows[rank][j];
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn gram_is_symmetric(vs in vectors(6, 5)) {
        let g = gram(&vs).unwrap();
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                prop_assert_eq!(g[(i, j)].to_bits(), g[(j, i)].to_bits());
            }
        }
    }

    #[test]
    fn gram_solvable_iff_independent(vs in vectors(6, 4)) {
        let g = gram(&vs).unwrap();
        let rhs = Vector64::from(vec![1.0; vs.len()]);
        let independent = rank_oracle(&vs, 1e-9) == vs.len();
        let solved = solve_spd(&g, &rhs);
        if independent {
            let x = solved.unwrap();
            let r = &g.mul_vec(&x).unwrap() - &rhs;
            prop_assert!(r.norm() <= 1e-6 * (1.0 + g.max_abs() * x.max_abs()));
        } else {
            prop_assert!(solved.is_err());
        }
    }

    #[test]
    fn independent_subset_has_oracle_rank(vs in vectors(6, 4)) {
        let picked = max_independent_subset(&vs, 1e-10).unwrap();
        prop_assert_eq!(picked.len(), rank_oracle(&vs, 1e-9));
    }

    #[test]
    fn orthonormalize_is_orthonormal(vs in vectors(8, 6)) {
        let q = orthonormalize(&vs, 1e-10).unwrap();
        for (i, a) in q.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                prop_assert!((a.dot(b).unwrap() - target).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn determinant_routes_agree(entries in prop::collection::vec(-3.0f64..3.0, 16)) {
        let a = Matrix64::from_row_major(4, 4, entries).unwrap();
        let spd = a.transpose().mul_mat(&a).unwrap();
        let lu = lu_determinant(&spd).unwrap();
        let chol = det_via_factorization(&spd).unwrap();
        prop_assert!((lu - chol).abs() <= 1e-8 * (1.0 + lu.abs()));
    }
}

fn rebased_gram_det(points: &[Vector64], base: usize) -> f64 {
    let diffs: Vec<Vector64> = points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != base)
        .map(|(_, p)| p - &points[base])
        .collect();
    det_via_factorization(&gram(&diffs).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn gram_determinant_ignores_base(points in vectors(5, 5).prop_filter("need two points", |p| p.len() >= 2)) {
        let d0 = rebased_gram_det(&points, 0);
        for k in 1..points.len() {
            let dk = rebased_gram_det(&points, k);
            prop_assert!((d0 - dk).abs() <= 1e-8 * d0.abs().max(dk.abs()).max(1e-300) + 1e-9);
        }
    }

    #[test]
    fn appended_combination_breaks_definiteness(
        vs in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 6), 1..=4),
        weights in prop::collection::vec(-2.0f64..2.0, 4),
    ) {
        let vs: Vec<Vector64> = vs.into_iter().map(Vector64::from).collect();
        prop_assume!(rank_oracle(&vs, 1e-6) == vs.len());
        let mut extended = vs.clone();
        let mut combo = Vector64::zeros(6);
        for (v, w) in vs.iter().zip(&weights) {
            combo.axpy(*w, v);
        }
        extended.push(combo);
        let ok = solve_spd(&gram(&vs).unwrap(), &Vector64::from(vec![1.0; vs.len()]));
        prop_assert!(ok.is_ok());
        let g = gram(&extended).unwrap();
        let err = solve_spd(&g, &Vector64::from(vec![1.0; extended.len()]));
        prop_assert!(matches!(err, Err(circum::Error::NotPositiveDefinite { .. })), "{:?}", err);
    }
}
