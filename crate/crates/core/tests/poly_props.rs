//! Properties of Sturm isolation and multivariate arithmetic.

use proptest::prelude::*;
use sniep_core::exact::{int, rat};
use sniep_core::poly::{count_real_roots, isolate_real_roots, parse_poly, MultiPoly, UniPoly};
use sniep_core::Rational;

fn from_roots(roots: &[Rational], extra: &UniPoly) -> UniPoly {
    roots.iter().fold(extra.clone(), |acc, r| acc.mul(&UniPoly::new(vec![-r.clone(), int(1)])))
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-20i64..=20, 1..=7)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| UniPoly::from_ints(&c))
}

fn multi() -> impl Strategy<Value = MultiPoly> {
    let term = (-5i64..=5, 0u32..3, 0u32..3, 0u32..2);
    prop::collection::vec(term, 1..5).prop_map(|terms| {
        let (x, y, z) = (MultiPoly::var("x"), MultiPoly::var("y"), MultiPoly::var("z"));
        // x^3 keeps x present; random terms have lower x-degree and cannot cancel it.
        terms.into_iter().fold(x.pow(3), |acc, (c, a, b, d)| {
            acc.add(&MultiPoly::int(c).mul(&x.pow(a)).mul(&y.pow(b)).mul(&z.pow(d)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_count_matches_isolation(p in small_poly()) {
        let n = count_real_roots(&p).unwrap();
        let ivs = isolate_real_roots(&p, 8).unwrap();
        prop_assert_eq!(n, ivs.len());
    }

    #[test]
    fn isolating_intervals_are_tight_and_bracket(p in small_poly(), digits in 1u32..=10) {
        let width = Rational::new(1.into(), sniep_core::exact::pow10(digits));
        let sf = p.square_free();
        for iv in isolate_real_roots(&p, digits).unwrap() {
            prop_assert!(iv.width() <= width);
            let s = sf.eval(&iv.lo) * sf.eval(&iv.hi);
            prop_assert!(s <= rat(0, 1));
        }
    }

    #[test]
    fn repeated_roots_are_counted_once(
        roots in prop::collection::btree_set(-30i64..30, 1..5),
        doubled in 0usize..4,
    ) {
        let mut all: Vec<Rational> = roots.iter().map(|&r| rat(r, 3)).collect();
        let k = doubled.min(all.len() - 1);
        all.push(all[k].clone());
        // x^2 + 1 adds no real roots.
        let p = from_roots(&all, &UniPoly::from_ints(&[1, 0, 1]));
        let ivs = isolate_real_roots(&p, 10).unwrap();
        prop_assert_eq!(ivs.len(), roots.len());
        for (iv, r) in ivs.iter().zip(roots.iter()) {
            prop_assert!(iv.contains(&rat(*r, 3)));
        }
    }

    #[test]
    fn product_rule(p in multi(), q in multi()) {
        let lhs = p.mul(&q).partial("x").unwrap();
        let rhs = p.mul(&q.partial("x").unwrap()).add(&q.mul(&p.partial("x").unwrap()));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in multi(), a in -9i64..9, b in -9i64..9) {
        let y_val = rat(b, 7);
        let sub = p.substitute("x", &MultiPoly::var("y").add(&MultiPoly::constant(rat(a, 5)))).unwrap();
        let direct = p.eval(&[("x", &y_val + rat(a, 5)), ("y", y_val.clone()), ("z", rat(1, 2))]).unwrap();
        let via = sub.eval(&[("y", y_val), ("z", rat(1, 2))]).unwrap();
        prop_assert_eq!(direct, via);
    }
}

#[test]
fn parsed_text_round_trips() {
    let p = parse_poly("3 x^2 y - 1/2 z + 7").unwrap();
    let q = parse_poly(&p.to_string()).unwrap();
    assert!(p.sub(&q).is_zero());
}
