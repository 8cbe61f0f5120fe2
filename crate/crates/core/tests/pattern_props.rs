//! Sampled checks of the two zero patterns: third eigenvalue bounds, soundness of
//! the exact certificates, mirror symmetry, and monotonicity of the bound pipeline.

use proptest::prelude::*;
use sniep_core::exact::rat;
use sniep_core::pattern_c::{self, build_c, derive_diag_bounds, offdiag_lower_bounds};
use sniep_core::pattern_h::{self, build_h, dual_name, h_predicates};
use sniep_core::sniep::{sample_c_params, sample_h_params, sweep_pattern_c, sweep_pattern_h};
use sniep_core::spectral::{eigen_jacobi, ORACLE_TOL};
use sniep_core::Rational;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn h_certificate_is_sound(seed in 0u64..u64::MAX) {
        let p = sample_h_params(seed, 0);
        if pattern_h::lambda3_certified(&p).unwrap() {
            let s = eigen_jacobi(&build_h(&p).unwrap().to_float(), ORACLE_TOL).unwrap();
            prop_assert!(s.values[2] <= 0.5 + 1e-10);
        }
    }

    #[test]
    fn c_certificate_is_sound(seed in 0u64..u64::MAX) {
        let p = sample_c_params(seed, 0);
        if pattern_c::lambda3_certified(&p).unwrap() {
            let s = eigen_jacobi(&build_c(&p).unwrap().to_float(), ORACLE_TOL).unwrap();
            prop_assert!(s.values[2] <= 0.5 + 1e-10);
        }
    }

    #[test]
    fn h_predicates_respect_the_mirror(seed in 0u64..u64::MAX) {
        let p = sample_h_params(seed, 0);
        let a = h_predicates(&p).unwrap();
        let b = h_predicates(&p.dual()).unwrap();
        for (name, value) in &a.values {
            prop_assert_eq!(b.at(dual_name(name)), *value, "{}", name);
        }
    }
}

fn sub_range(lo: &Rational, hi: &Rational, a: u32, b: u32) -> (Rational, Rational) {
    let (a, b) = (a.min(b), a.max(b));
    let w = hi - lo;
    (lo + &w * rat(i64::from(a), 100), lo + &w * rat(i64::from(b), 100))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shrinking_a_box_never_lowers_a_bound(
        case in 1u8..=4,
        outer in prop::collection::vec((0u32..=100, 0u32..=100), 2),
        inner in prop::collection::vec((0u32..=100, 0u32..=100), 2),
    ) {
        let domain = pattern_c::bounds::case_domain(case);
        let outer_box: Vec<_> = domain.iter().zip(&outer).map(|((l, h), &(a, b))| sub_range(l, h, a, b)).collect();
        let inner_box: Vec<_> = outer_box.iter().zip(&inner).map(|((l, h), &(a, b))| sub_range(l, h, a, b)).collect();
        let (Ok(bo), Ok(bi)) = (derive_diag_bounds(case, &outer_box), derive_diag_bounds(case, &inner_box)) else {
            return Ok(());
        };
        for k in 0..5 {
            prop_assert!(bi.lower[k] >= bo.lower[k] && bi.upper[k] <= bo.upper[k]);
        }
        let (Ok(co), Ok(ci)) = (offdiag_lower_bounds(&bo, 2), offdiag_lower_bounds(&bi, 2)) else {
            return Ok(());
        };
        let pairs = [
            (&co.m12_sq, &ci.m12_sq),
            (&co.m24_sq, &ci.m24_sq),
            (&co.m13_sq, &ci.m13_sq),
            (&co.m45_sq, &ci.m45_sq),
            (&co.m35_13_sq, &ci.m35_13_sq),
            (&co.m35_45_sq, &ci.m35_45_sq),
        ];
        for (i, (o, n)) in pairs.iter().enumerate() {
            prop_assert!(n >= o, "bound {} dropped", i);
        }
    }
}

#[test]
fn third_eigenvalue_bound_on_patterns() {
    let h = sweep_pattern_h(20_000, 1, 4).unwrap();
    assert_eq!(h.violations, 0, "{h:?}");
    assert!(h.kept > 100, "{h:?}");
    let c = sweep_pattern_c(20_000, 2, 4).unwrap();
    assert_eq!(c.violations, 0, "{c:?}");
    assert!(c.kept > 100, "{c:?}");
}
