//! Interlacing, permutation invariance and Jacobi against exact characteristic polynomials.

use proptest::prelude::*;
use sniep_core::exact::{rat, to_f64};
use sniep_core::poly::isolate_real_roots;
use sniep_core::spectral::{charpoly_exact, eigen_jacobi, interlaces, SymMatrix, ORACLE_TOL};

fn symmetric(lo: f64) -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(lo..1.0f64, 15).prop_map(|v| {
        let mut m = SymMatrix::zeros_float(5);
        let mut k = 0;
        for i in 0..5 {
            for j in i..5 {
                m.set_f64(i, j, v[k]);
                k += 1;
            }
        }
        m
    })
}

fn exact_matrix() -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(-20i64..=20, 15).prop_map(|v| {
        let mut m = SymMatrix::zeros_exact(5);
        let mut k = 0;
        for i in 0..5 {
            for j in i..5 {
                m.set_exact(i, j, rat(v[k], 4));
                k += 1;
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn principal_submatrices_interlace(m in symmetric(-1.0)) {
        let parent = eigen_jacobi(&m, ORACLE_TOL).unwrap();
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
            let sub = m.principal_submatrix(&idx).unwrap();
            let child = eigen_jacobi(&sub, ORACLE_TOL).unwrap();
            prop_assert!(interlaces(&parent.values, &child.values, 1e-8));
        }
    }

    #[test]
    fn nonnegative_submatrix_radius_is_smaller(m in symmetric(0.0)) {
        let rho = eigen_jacobi(&m, ORACLE_TOL).unwrap().spectral_radius();
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
            let sub = m.principal_submatrix(&idx).unwrap();
            prop_assert!(eigen_jacobi(&sub, ORACLE_TOL).unwrap().spectral_radius() <= rho + 1e-8);
        }
    }

    #[test]
    fn jacobi_preserves_trace(m in symmetric(-1.0)) {
        let s = eigen_jacobi(&m, ORACLE_TOL).unwrap();
        let sum: f64 = s.values.iter().sum();
        prop_assert!((sum - m.trace_f64()).abs() <= 5.0 * ORACLE_TOL + 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn charpoly_is_permutation_invariant(m in exact_matrix(), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = m.permute(&perm).unwrap();
        prop_assert_eq!(charpoly_exact(&m).unwrap(), charpoly_exact(&p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_agrees_with_exact_roots(m in symmetric(-1.0)) {
        // Truncate to a rational matrix so both sides see the same input.
        let mut q = SymMatrix::zeros_exact(5);
        for i in 0..5 {
            for j in i..5 {
                q.set_exact(i, j, rat((m.get_f64(i, j) * 1e3).round() as i64, 1000));
            }
        }
        let roots = isolate_real_roots(&charpoly_exact(&q).unwrap(), 8).unwrap();
        let numeric = eigen_jacobi(&q.to_float(), ORACLE_TOL).unwrap();
        // Distinct exact roots, ascending; every numeric eigenvalue sits near one.
        for v in &numeric.values {
            prop_assert!(roots.iter().any(|iv| (to_f64(&iv.midpoint()) - v).abs() < 1e-6));
        }
    }
}
