//! Exact truth values of the bounds used against the pattern.
//!
//! Every bound of the form `a <= k sqrt(e)` is decided as `a^2 <= k^2 e` with the
//! radicand sign checked first; nested radicals go through [`sign_plus_sqrt`].

use std::cmp::Ordering;

use num_traits::Signed;

use super::{build_h, HParams};
use crate::error::Result;
use crate::exact::{int, rat, Rational};
use crate::inequality::{sign_plus_sqrt, PredicateSet, Truth};
use crate::spectral::charpoly_exact;

/// Predicate names in report order.
pub const PREDICATE_NAMES: [&str; 23] = [
    "s1_nonnegative",
    "a45_room",
    "a24_room",
    "a24_small",
    "a45_small",
    "a13_small",
    "a12_upper",
    "a35_upper",
    "a24_upper_plain",
    "a45_upper_plain",
    "a25_upper",
    "s2_positive",
    "a12_small",
    "a35_small",
    "a12_large",
    "a35_large",
    "a24_better_upper",
    "a45_better_upper",
    "a45_better_lower",
    "a24_better_lower",
    "a13_large",
    "half_witness_1245",
    "lambda3_certified",
];

/// Name of the predicate obtained by the mirror symmetry of the pattern.
pub fn dual_name(name: &str) -> &str {
    const PAIRS: [(&str, &str); 9] = [
        ("a45_room", "a24_room"),
        ("a24_small", "a45_small"),
        ("a12_upper", "a35_upper"),
        ("a24_upper_plain", "a45_upper_plain"),
        ("a12_small", "a35_small"),
        ("a12_large", "a35_large"),
        ("a24_better_upper", "a45_better_upper"),
        ("a45_better_lower", "a24_better_lower"),
        ("half_witness_1245", "half_witness_2345"),
    ];
    for (a, b) in PAIRS {
        if name == a {
            return b;
        }
        if name == b {
            return a;
        }
    }
    name
}

struct Values {
    t: Rational,
    s: Rational,
    a12: Rational,
    a13: Rational,
    a24: Rational,
    a25: Rational,
    a35: Rational,
    a45: Rational,
    s1: Rational,
    s2: Rational,
}

impl Values {
    fn new(p: &HParams) -> Self {
        let (s, a24, a25, a45) = (&p.s, &p.a24, &p.a25, &p.a45);
        let one = int(1);
        let s1 = &one - s - a24 * a24 - (&one - s) * a25 * a25 - a45 * a45 - int(2) * a24 * a25 * a45;
        let s2 = int(-1) + int(2) * s + int(4) * a24 * a24 + int(4) * (&one - int(2) * s) * a25 * a25
            + int(4) * a45 * a45
            + int(16) * a24 * a25 * a45;
        Self {
            t: p.t.clone(),
            s: p.s.clone(),
            a12: p.a12.clone(),
            a13: p.a13.clone(),
            a24: a24.clone(),
            a25: a25.clone(),
            a35: p.a35.clone(),
            a45: a45.clone(),
            s1,
            s2,
        }
    }
}

fn sq(x: &Rational) -> Rational {
    x * x
}

/// `a^2 den <= coef S1` with `den > 0` and `S1 >= 0`; otherwise undefined.
fn upper_from_s1(a: &Rational, den: &Rational, coef: &Rational, s1: &Rational) -> Truth {
    if !den.is_positive() || s1.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(sq(a) * den <= coef * s1)
}

/// `4 a^2 den <= num` with `den > 0` and `num >= 0`; otherwise undefined.
fn small_from_s2(a: &Rational, den: &Rational, num: &Rational) -> Truth {
    if !den.is_positive() || num.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(int(4) * sq(a) * den <= *num)
}

/// `a^2 > (1-s)/2 - sqrt(1 - (1-2s)(3-2s) ratio) / 4`.
fn better_lower(a: &Rational, s: &Rational, ratio: &Rational) -> Truth {
    let one = int(1);
    let v = &one - (&one - int(2) * s) * (int(3) - int(2) * s) * ratio;
    if v.is_negative() {
        return Truth::Undefined;
    }
    let base = (&one - s) / int(2);
    // The bound itself must be a real square root.
    if sign_plus_sqrt(&base, &rat(-1, 4), &v) == Ordering::Less {
        return Truth::Undefined;
    }
    Truth::from_bool(sign_plus_sqrt(&(sq(a) - base), &rat(1, 4), &v) == Ordering::Greater)
}

/// `P(1/2) <= 0` for the principal submatrix on `idx` (0-based).
fn half_witness(p: &HParams, idx: &[usize]) -> Result<Truth> {
    let m = build_h(p)?.principal_submatrix(idx)?;
    let v = charpoly_exact(&m)?.eval(&rat(1, 2));
    Ok(Truth::from_bool(!v.is_positive()))
}

/// Exact truth values for every bound, in [`PREDICATE_NAMES`] order plus the
/// mirrored witness `half_witness_2345`.
pub fn h_predicates(p: &HParams) -> Result<PredicateSet> {
    p.validate()?;
    let v = Values::new(p);
    let (t, s) = (&v.t, &v.s);
    let one = int(1);
    let two = int(2);
    let mut out = PredicateSet::default();

    out.push("s1_nonnegative", Truth::from_bool(!v.s1.is_negative()));
    out.push("a45_room", Truth::from_bool(!(&one - s - sq(&v.a45)).is_negative()));
    out.push("a24_room", Truth::from_bool(!(&one - s - sq(&v.a24)).is_negative()));

    let small_bound = &one - &two * s;
    let a24_small = Truth::from_bool(int(4) * sq(&v.a24) <= small_bound);
    let a45_small = Truth::from_bool(int(4) * sq(&v.a45) <= small_bound);
    let a13_bound = &two * (&one - &two * t) * (t + s);
    let a13_small = Truth::from_bool(int(4) * sq(&v.a13) <= a13_bound);
    out.push("a24_small", a24_small);
    out.push("a45_small", a45_small);
    out.push("a13_small", a13_small);

    out.push(
        "a12_upper",
        upper_from_s1(&v.a12, &(&one - s - sq(&v.a45)), &((&one + &two * t + &two * s) / &two), &v.s1),
    );
    out.push("a35_upper", upper_from_s1(&v.a35, &(&one - s - sq(&v.a24)), &(&one - t), &v.s1));

    let plain = int(3) - &two * s;
    out.push("a24_upper_plain", Truth::from_bool(int(4) * sq(&v.a24) < plain));
    out.push("a45_upper_plain", Truth::from_bool(int(4) * sq(&v.a45) < plain));
    out.push("a25_upper", Truth::from_bool(&two * (&one - s) * &v.a25 < one));
    out.push("s2_positive", Truth::from_bool(v.s2.is_positive()));

    let a12_small = small_from_s2(&v.a12, &(int(4) * sq(&v.a45) + &two * s - &one), &(&two * (t + s) * &v.s2));
    let a35_small = small_from_s2(&v.a35, &(int(4) * sq(&v.a24) + &two * s - &one), &((&one - &two * t) * &v.s2));
    out.push("a12_small", a12_small);
    out.push("a35_small", a35_small);
    out.push("a12_large", !a12_small);
    out.push("a35_large", !a35_small);

    // 4 a24^2 (1+t+s) < (3-2s)(1+3t+3s - 2 sqrt((1+2t+2s)(t+s)))
    let k = int(3) - &two * s;
    let c = &one + t + s;
    let pp = &one + int(3) * t + int(3) * s;
    let w = (&one + &two * t + &two * s) * (t + s);
    out.push(
        "a24_better_upper",
        Truth::from_bool(sign_plus_sqrt(&(&k * &pp - int(4) * sq(&v.a24) * &c), &(-&two * &k), &w) == Ordering::Greater),
    );
    // 4 a45^2 (3-2t) < (3-2s)(5-6t - 4 sqrt((1-t)(1-2t)))
    let w2 = (&one - t) * (&one - &two * t);
    let lhs = &k * (int(5) - int(6) * t) - int(4) * sq(&v.a45) * (int(3) - &two * t);
    out.push(
        "a45_better_upper",
        Truth::from_bool(sign_plus_sqrt(&lhs, &(-int(4) * &k), &w2) == Ordering::Greater),
    );
    out.push("a45_better_lower", better_lower(&v.a45, s, &((t + s) / &c)));
    out.push(
        "a24_better_lower",
        better_lower(&v.a24, s, &((&one - &two * t) / (int(3) - &two * t))),
    );
    out.push("a13_large", !a13_small);

    let w1245 = half_witness(p, &[0, 1, 3, 4])?;
    let w2345 = half_witness(p, &[1, 2, 3, 4])?;
    out.push("half_witness_1245", w1245);

    let large_pair = a24_small.fails() && a45_small.fails();
    let certified = a24_small.holds()
        || a45_small.holds()
        || a13_small.holds()
        || (large_pair && (w1245.holds() || w2345.holds()));
    out.push("lambda3_certified", Truth::from_bool(certified));
    out.push("half_witness_2345", w2345);
    Ok(out)
}

/// True when the exact predicates alone prove that the third eigenvalue is at most 1/2.
///
/// Sources of the certificate: a 3x3 principal submatrix with spectral radius at
/// most 1/2, or (with both `a24` and `a45` above their small bounds) a 4x4
/// principal submatrix whose characteristic polynomial is nonpositive at 1/2.
pub fn lambda3_certified(p: &HParams) -> Result<bool> {
    Ok(h_predicates(p)?.at("lambda3_certified").holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern_h::build_h;
    use crate::spectral::{eigen_jacobi, ORACLE_TOL};

    fn p(v: [(i64, i64); 8]) -> HParams {
        HParams::from_array(v.map(|(n, d)| rat(n, d)))
    }

    #[test]
    fn zero_entries() {
        let set = h_predicates(&HParams::zero()).unwrap();
        assert_eq!(set.at("s1_nonnegative"), Truth::Holds);
        assert_eq!(set.at("a24_small"), Truth::Holds);
        assert_eq!(set.at("lambda3_certified"), Truth::Holds);
    }

    #[test]
    fn boundary_a24_counts_as_small() {
        // s = 0 makes the bound 1/2 exactly.
        let q = p([(1, 10), (0, 1), (1, 3), (1, 5), (1, 2), (1, 4), (1, 3), (3, 5)]);
        let set = h_predicates(&q).unwrap();
        assert_eq!(set.at("a24_small"), Truth::Holds);
        assert!(lambda3_certified(&q).unwrap());
        let spec = eigen_jacobi(&build_h(&q).unwrap().to_float(), ORACLE_TOL).unwrap();
        assert!(spec.values[2] <= 0.5 + 1e-10);
    }

    #[test]
    fn dual_names_are_involutive() {
        for n in PREDICATE_NAMES {
            assert_eq!(dual_name(dual_name(n)), n);
        }
    }

    #[test]
    fn dual_predicates_agree() {
        let q = p([(1, 10), (1, 20), (1, 3), (3, 5), (3, 5), (1, 7), (2, 5), (7, 10)]);
        let a = h_predicates(&q).unwrap();
        let b = h_predicates(&q.dual()).unwrap();
        for (name, value) in &a.values {
            assert_eq!(b.at(dual_name(name)), *value, "{name}");
        }
    }

    #[test]
    fn undefined_when_denominator_vanishes() {
        // 4 a45^2 + 2s - 1 = 0
        let q = p([(1, 10), (0, 1), (1, 3), (1, 5), (3, 5), (1, 4), (1, 3), (1, 2)]);
        assert_eq!(h_predicates(&q).unwrap().at("a12_small"), Truth::Undefined);
    }
}
