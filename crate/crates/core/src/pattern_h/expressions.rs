//! Named polynomials and surd expressions derived from the pattern.
//!
//! Variables: `t, s` and the entry names, plus `x, y, z, w` as free arguments of
//! the auxiliary functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{to_f64, Rational};
use crate::inequality::{sign_plus_sqrt, Truth};
use crate::poly::MultiPoly;
use crate::replay::poly_in;

/// Definitions in dependency order; later texts may use earlier names.
const DEFINITIONS: &[(&str, &str)] = &[
    ("S1", "1 - s - a24^2 - (1-s) a25^2 - a45^2 - 2 a24 a25 a45"),
    ("S2", "-1 + 2s + 4a24^2 + 4(1-2s) a25^2 + 4a45^2 + 16 a24 a25 a45"),
    ("C1", "1 + t + s"),
    ("C2", "(1+t+s)(4y + 6s - 5)"),
    ("C3", "(-1 + 2t + 4s) y + (1-s)(1-2s)(1+t+s)"),
    ("f1", "4 C1 x^2 + C2 x + C3"),
    ("g1", "16 C1 y^2 - 8(3-2s)(1+3t+3s) y + (3-2s)^2 C1"),
    (
        "f2",
        "(-1 + z^2) y^2 - 2 x z w y - 1/2 (1-t)(1+2t+2s) z^2 - 1/2 (t - 1 + w^2)(1 + 2t + 2s - 2x^2)",
    ),
    (
        "f3",
        "-4((1-2t)(1+t+s) x + (3-2t)(t+s) y)(4x + 4y + 2s - 1) \
         - (1-2s)(6t^2 - 3(1-2s) t - 5s - 1)(4x + 4y + 2s - 1) \
         + 4(1+s)(4x + 2s - 1)(4y + 2s - 1)",
    ),
    ("C4", "16t^2 - 8(1-2s) t + 3(1-2s)"),
    ("C5", "16t^3 + 56t^2 s + 40t s^2 + 28t^2 - 12s^2 + 12t s - 12t + 9"),
    ("C6", "(4t^2 + 4t s + 2s + 3)^2"),
    ("g2", "256(3+2s) C4 x^2 - 128(1-2s) C5 x + 16(1-2s)^2 C6"),
    (
        "h1",
        "64s^2 t^2 + 64t s^3 - 24s^3 + 32t^3 - 16t s^2 + 48s t^2 + 12s^2 - 152t^2 - 168t s + 78s + 56t - 3",
    ),
    (
        "h2",
        "128s^4 t + 128t^2 s^3 - 48s^4 - 192t s^3 + 64s^2 t^2 + 256s t^3 + 64t^4 \
         + 96s^3 - 512t s^2 - 736s t^2 - 192t^3 + 232s^2 + 528t s + 352t^2 - 136s - 120t + 1",
    ),
    ("h3", "-(6 - 8t) s + 2t^2 - 15t + 9"),
    ("h4", "4s^2 - 16t s - 2t^2 + 27t - 9"),
    ("h5", "44t s^2 + 56s t^2 - 12s^2 + 36t^2 - 4t s + 6s - 9t"),
    ("h6", "(36s^2 + 44s + 33) t^2 + (-16s^2 + 32s - 12) t + 24s^2 - 12s"),
];

/// Value of `(a + b sqrt(c)) / d` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdValue {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl SurdValue {
    pub fn to_f64(&self) -> f64 {
        (to_f64(&self.a) + to_f64(&self.b) * to_f64(&self.c).sqrt()) / to_f64(&self.d)
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        let num = sign_plus_sqrt(&(&self.a - x * &self.d), &self.b, &self.c);
        if self.d.is_negative() {
            num.reverse()
        } else {
            num
        }
    }
}

/// Symbolic `(a + b sqrt(c)) / d` with polynomial parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SurdForm {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub d: MultiPoly,
}

impl SurdForm {
    /// Evaluates at a point; errors on a negative radicand or zero denominator.
    pub fn eval(&self, assignment: &[(&str, Rational)]) -> Result<SurdValue> {
        let v = SurdValue {
            a: self.a.eval(assignment)?,
            b: self.b.eval(assignment)?,
            c: self.c.eval(assignment)?,
            d: self.d.eval(assignment)?,
        };
        if v.c.is_negative() {
            return Err(Error::Domain("negative radicand".into()));
        }
        if v.d.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(v)
    }

    /// `d^k p((a + b r)/d)` reduced with `r^2 = c`, where `k` is the degree of `p` in `var`.
    ///
    /// Zero exactly when the surd is a root of `p` for every parameter value.
    pub fn cleared_value_in(&self, p: &MultiPoly, var: &str) -> MultiPoly {
        const ROOT: &str = "__root";
        let k = p.degree_in(var);
        let num = self.a.add(&self.b.mul(&MultiPoly::var(ROOT)));
        let mut acc = MultiPoly::zero();
        for j in 0..=k {
            let coeff = p.coefficient_of(var, j);
            acc = acc.add(&coeff.mul(&num.pow(j)).mul(&self.d.pow(k - j)));
        }
        acc.reduce_radical(ROOT, &self.c)
    }
}

/// Registry of the named polynomials and surd forms.
#[derive(Debug, Clone)]
pub struct HExpressions {
    env: BTreeMap<String, MultiPoly>,
    order: Vec<&'static str>,
}

impl Default for HExpressions {
    fn default() -> Self {
        Self::new()
    }
}

impl HExpressions {
    pub fn new() -> Self {
        let mut env = BTreeMap::new();
        let mut order = Vec::new();
        for (name, text) in DEFINITIONS {
            let p = poly_in(text, &env);
            env.insert((*name).to_string(), p);
            order.push(*name);
        }
        Self { env, order }
    }

    /// The named polynomial.
    ///
    /// # Panics
    /// Panics on an unknown name; names are fixed at compile time.
    pub fn get(&self, name: &str) -> &MultiPoly {
        self.env.get(name).unwrap_or_else(|| panic!("unknown expression {name}"))
    }

    /// Parses text that may refer to registered names.
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        crate::poly::parse_poly_with(text, &self.env)
    }

    /// Registered names in definition order.
    pub fn names(&self) -> &[&'static str] {
        &self.order
    }

    /// The registry as a parse environment.
    pub fn env(&self) -> &BTreeMap<String, MultiPoly> {
        &self.env
    }

    fn p(&self, text: &str) -> MultiPoly {
        poly_in(text, &self.env)
    }

    fn surd(&self, a: &str, b: &str, c: &str, d: &str) -> SurdForm {
        SurdForm { a: self.p(a), b: self.p(b), c: self.p(c), d: self.p(d) }
    }

    /// Roots of `g1` in `y` (sign selects the branch).
    pub fn q1(&self, plus: bool) -> SurdForm {
        let b = if plus { "2(3-2s)" } else { "-2(3-2s)" };
        self.surd("(3-2s)(1+3t+3s)", b, "(1+2t+2s)(t+s)", "4(1+t+s)")
    }

    /// Roots of `g2` in `x`.
    pub fn q2(&self, plus: bool) -> SurdForm {
        let b = if plus { "8(1-2t)(1-2s)" } else { "-8(1-2t)(1-2s)" };
        self.surd("(1-2s) C5", b, "(3-2t)(1+s)(t+s)^3", "4(3+2s) C4")
    }

    /// Roots of `f1` in `x` for symbolic `y`.
    pub fn r1(&self, plus: bool) -> SurdForm {
        let b = if plus { "1" } else { "-1" };
        self.surd("-(4y + 6s - 5)(1+t+s)", b, "(1+t+s) g1", "8(1+t+s)")
    }

    /// Lower end of the `x` range.
    pub fn x_min(&self) -> SurdForm {
        self.surd(
            "2(1-s)(1+t+s)",
            "-1",
            "(1+t+s)((1+t+s) - (1-2s)(3-2s)(t+s))",
            "4(1+t+s)",
        )
    }

    /// Upper end of the `x` range.
    pub fn x_max(&self) -> SurdForm {
        self.surd("(3-2s)(5-6t)", "-4(3-2s)", "(1-t)(1-2t)", "4(3-2t)")
    }

    /// Membership of `x` in the domain bounded by [`Self::x_min`] and [`Self::x_max`].
    ///
    /// Only `x` is constrained; `y` is left free.
    pub fn in_domain(&self, s: &Rational, t: &Rational, x: &Rational) -> Truth {
        let asg = [("s", s.clone()), ("t", t.clone())];
        match (self.x_min().eval(&asg), self.x_max().eval(&asg)) {
            (Ok(lo), Ok(hi)) => Truth::from_bool(lo.cmp_rational(x) != Ordering::Greater && hi.cmp_rational(x) != Ordering::Less),
            _ => Truth::Undefined,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::identity_check;

    #[test]
    fn registry_builds_and_expands() {
        let e = HExpressions::new();
        assert_eq!(e.names().len(), DEFINITIONS.len());
        let f1 = e.get("f1");
        assert_eq!(f1.degree_in("x"), 2);
        assert!(identity_check(&e.get("C6").coefficient_of("t", 4), &crate::replay::poly("16")));
    }

    #[test]
    fn surd_roots_of_g1() {
        let e = HExpressions::new();
        for plus in [true, false] {
            assert!(e.q1(plus).cleared_value_in(e.get("g1"), "y").is_zero());
        }
    }

    #[test]
    fn surd_comparison() {
        // (1 + sqrt(2)) / 2 ~ 1.207
        let v = SurdValue { a: rat(1, 1), b: rat(1, 1), c: rat(2, 1), d: rat(2, 1) };
        assert_eq!(v.cmp_rational(&rat(6, 5)), Ordering::Greater);
        assert_eq!(v.cmp_rational(&rat(121, 100)), Ordering::Less);
        let w = SurdValue { d: rat(-2, 1), ..v };
        assert_eq!(w.cmp_rational(&rat(-6, 5)), Ordering::Less);
    }

    #[test]
    fn domain_is_nonempty_inside() {
        let e = HExpressions::new();
        let (s, t) = (rat(3, 10), rat(1, 20));
        let asg = [("s", s.clone()), ("t", t.clone())];
        let lo = e.x_min().eval(&asg).unwrap().to_f64();
        let hi = e.x_max().eval(&asg).unwrap().to_f64();
        assert!(lo <= hi);
        let mid = crate::exact::from_f64((lo + hi) / 2.0).unwrap();
        assert_eq!(e.in_domain(&s, &t, &mid), Truth::Holds);
        assert_eq!(e.in_domain(&s, &t, &rat(5, 1)), Truth::Fails);
    }
}
