//! Properties of the realizability decision and the certificate construction.

use proptest::prelude::*;
use sniep_core::exact::{rat, to_f64};
use sniep_core::sniep::{
    check_conditions, glue, in_region, normalize, random_feasible_spectrum, realize, sample_at, sweep_random,
    FailedCondition, PerronBlock, SpectrumList, VerdictKind, CERTIFICATE_TOL, ENTRY_TOL,
};
use sniep_core::spectral::{eigen_jacobi, ORACLE_TOL};
use sniep_core::Rational;

fn spectrum() -> impl Strategy<Value = SpectrumList> {
    prop::collection::vec(-1000i64..=1000, 5)
        .prop_map(|v| SpectrumList::new(&v.iter().map(|&x| rat(x, 1000)).collect::<Vec<_>>()).unwrap())
}

fn positive_scale() -> impl Strategy<Value = Rational> {
    (1i64..500, 1i64..500).prop_map(|(n, d)| rat(n, d))
}

/// A block realizing `(root, rest..)` built from a random spectrum with nonpositive tail.
fn block() -> impl Strategy<Value = (PerronBlock, Vec<f64>)> {
    (0.0f64..2.0, prop::collection::vec(0.0f64..1.0, 0..2)).prop_map(|(root, tail)| {
        let mut rest: Vec<f64> = tail.iter().map(|x| -x * root / 2.0).collect();
        rest.sort_by(|a, b| b.total_cmp(a));
        let mut b = PerronBlock::single(root + rest.iter().sum::<f64>());
        let mut lead = root + rest.iter().sum::<f64>();
        for r in rest.iter().rev() {
            lead -= r;
            b = glue(&b, &PerronBlock::single(0.0), lead).unwrap().0;
        }
        let mut spec = vec![root];
        spec.extend(rest);
        (b, spec)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn realize_is_sound(seed in 0u64..1_000_000) {
        let s = random_feasible_spectrum(seed, 0);
        let c = realize(&s).unwrap();
        prop_assert!(c.matrix.min_entry() >= ENTRY_TOL);
        let spec = eigen_jacobi(&c.matrix, ORACLE_TOL).unwrap();
        prop_assert!(spec.max_deviation(&s.to_f64()) < CERTIFICATE_TOL);
    }

    #[test]
    fn verdict_is_scale_invariant(s in spectrum(), c in positive_scale()) {
        let a = check_conditions(&s);
        let b = check_conditions(&s.scaled(&c).unwrap());
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.failed_condition, b.failed_condition);
    }

    #[test]
    fn mcdonald_neumann_never_decides_in_region(s in spectrum()) {
        prop_assert_ne!(check_conditions(&s).failed_condition, Some(FailedCondition::McdonaldNeumann));
    }

    #[test]
    fn normalization_fixes_trace(s in spectrum()) {
        if let Ok((n, scale)) = normalize(&s) {
            prop_assert_eq!(n.trace(), &rat(1, 2));
            let back = n.scaled(&scale).unwrap();
            prop_assert_eq!(back.values(), s.values());
            prop_assert_eq!(n.lambda(1) <= &rat(1, 1), in_region(&s));
        }
    }

    #[test]
    fn glue_replaces_the_two_roots(
        (a, sa) in block(),
        (b, sb) in block(),
        extra in 0.0f64..1.0,
    ) {
        let gamma = a.root.max(b.root) + extra;
        let (c, _) = glue(&a, &b, gamma).unwrap();
        let mut want = vec![gamma, a.root + b.root - gamma];
        want.extend(&sa[1..]);
        want.extend(&sb[1..]);
        let got = eigen_jacobi(&c.matrix, ORACLE_TOL).unwrap();
        prop_assert!(got.max_deviation(&want) < 1e-9);
        prop_assert!(c.matrix.min_entry() >= 0.0);
    }

    #[test]
    fn samples_are_deterministic(seed in 0u64..1000, index in 0u64..1000) {
        let t = rat(1, 2);
        prop_assert_eq!(sample_at(&t, seed, index), sample_at(&t, seed, index));
        prop_assert!((sample_at(&t, seed, index).trace_f64() - 0.5).abs() < 1e-12);
    }
}

#[test]
fn third_eigenvalue_bound_on_samples() {
    let s = sweep_random(&rat(1, 2), 20_000, 5, 4).unwrap();
    assert_eq!(s.violations, 0, "{s:?}");
    assert!(s.kept > 1000);
}

#[test]
fn feasible_spectra_are_realizable() {
    for i in 0..200 {
        let s = random_feasible_spectrum(11, i);
        assert_eq!(check_conditions(&s).kind, VerdictKind::Realizable);
        assert!(to_f64(s.trace()) >= 0.0);
    }
}
