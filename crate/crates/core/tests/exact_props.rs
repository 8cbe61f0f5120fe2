//! Properties of exact rationals and certified decimal square-root bounds.

use proptest::prelude::*;
use sniep_core::exact::{rat, sqrt_lower_bound, sqrt_upper_bound, verify_sqrt_bound, Side};
use sniep_core::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| rat(n, d))
}

fn nonnegative() -> impl Strategy<Value = Rational> {
    (0i64..1_000_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn addition_and_division_are_exact(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if b != rat(0, 1) {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn sqrt_bounds_bracket_the_root(x in nonnegative(), n in 0u32..=12) {
        let lo = sqrt_lower_bound(&x, n).unwrap();
        let hi = sqrt_upper_bound(&x, n).unwrap();
        let step = Rational::new(1.into(), sniep_core::exact::pow10(n));
        prop_assert!(&lo * &lo <= x);
        prop_assert!(&hi * &hi >= x);
        prop_assert!(lo <= hi);
        prop_assert!(&hi - &lo <= &step * rat(2, 1));
        // The lower bound is the largest grid point below the root.
        let next = &lo + &step;
        prop_assert!(&next * &next > x);
    }

    #[test]
    fn computed_bounds_verify(x in nonnegative(), n in 0u32..=12) {
        let lo = sqrt_lower_bound(&x, n).unwrap();
        let hi = sqrt_upper_bound(&x, n).unwrap();
        prop_assert!(verify_sqrt_bound(&x, &lo, Side::Lower).unwrap());
        prop_assert!(verify_sqrt_bound(&x, &hi, Side::Upper).unwrap());
    }
}

#[test]
fn floor_semantics_match_table_values() {
    // sqrt(0.2716) = 0.52115..., truncated to 13/25.
    assert_eq!(sqrt_lower_bound(&rat(2716, 10_000), 2).unwrap(), rat(13, 25));
    assert!(sqrt_lower_bound(&rat(-1, 2), 2).is_err());
}
