//! Exact decisions for inequalities that involve square roots of rationals.
//!
//! Every comparison is rewritten in squared form with explicit sign guards, so
//! no radical is ever approximated.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::Rational;

/// Three-valued outcome of a predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    Holds,
    Fails,
    /// The expression is not defined at this point (zero denominator or negative radicand).
    Undefined,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::Holds
        } else {
            Truth::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Truth::Holds
    }

    pub fn fails(self) -> bool {
        self == Truth::Fails
    }

}

/// Logical negation; undefined stays undefined.
impl std::ops::Not for Truth {
    type Output = Self;

    fn not(self) -> Self {
        match self {
            Truth::Holds => Truth::Fails,
            Truth::Fails => Truth::Holds,
            Truth::Undefined => Truth::Undefined,
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::Holds => "holds",
            Truth::Fails => "fails",
            Truth::Undefined => "undefined",
        })
    }
}

fn sign(x: &Rational) -> Ordering {
    x.cmp(&Rational::zero())
}

/// Sign of `a + b * sqrt(c)` for `c >= 0`.
///
/// # Panics
/// Panics if `c < 0`.
pub fn sign_plus_sqrt(a: &Rational, b: &Rational, c: &Rational) -> Ordering {
    assert!(!c.is_negative(), "radicand must be nonnegative");
    let sa = sign(a);
    let sb = if c.is_zero() { Ordering::Equal } else { sign(b) };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: compare magnitudes squared.
    match (a * a).cmp(&(b * b * c)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// `v <= k * sqrt(e)` for `v >= 0`, `k > 0`; undefined when `e < 0`.
pub fn le_scaled_sqrt(v: &Rational, k: &Rational, e: &Rational) -> Truth {
    if e.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(v * v <= k * k * e)
}

/// `v < k * sqrt(e)` for `v >= 0`, `k > 0`; undefined when `e < 0`.
pub fn lt_scaled_sqrt(v: &Rational, k: &Rational, e: &Rational) -> Truth {
    if e.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(v * v < k * k * e)
}

/// `v <= sqrt(e)`.
pub fn le_sqrt(v: &Rational, e: &Rational) -> Truth {
    le_scaled_sqrt(v, &Rational::from_integer(1.into()), e)
}

/// `v < sqrt(e)`.
pub fn lt_sqrt(v: &Rational, e: &Rational) -> Truth {
    lt_scaled_sqrt(v, &Rational::from_integer(1.into()), e)
}

/// `v <= sqrt(e) / 2`.
pub fn le_half_sqrt(v: &Rational, e: &Rational) -> Truth {
    le_scaled_sqrt(v, &Rational::new(1.into(), 2.into()), e)
}

/// `v < sqrt(e) / 2`.
pub fn lt_half_sqrt(v: &Rational, e: &Rational) -> Truth {
    lt_scaled_sqrt(v, &Rational::new(1.into(), 2.into()), e)
}

/// `num / den`, undefined when `den = 0`.
pub fn checked_div(num: &Rational, den: &Rational) -> Option<Rational> {
    if den.is_zero() {
        None
    } else {
        Some(num / den)
    }
}

/// Named predicate values in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PredicateSet {
    pub values: Vec<(String, Truth)>,
}

impl PredicateSet {
    pub fn push(&mut self, name: &str, value: Truth) {
        self.values.push((name.to_string(), value));
    }

    pub fn get(&self, name: &str) -> Option<Truth> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, t)| *t)
    }

    /// Value by name; `Undefined` for unknown names.
    pub fn at(&self, name: &str) -> Truth {
        self.get(name).unwrap_or(Truth::Undefined)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.values.iter().map(|(n, _)| n.as_str())
    }
}

impl fmt::Display for PredicateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in &self.values {
            writeln!(f, "{n}: {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn sign_of_surd_sums() {
        // 1 - sqrt(2) < 0
        assert_eq!(sign_plus_sqrt(&int(1), &int(-1), &int(2)), Ordering::Less);
        // 3 - 2 sqrt(2) > 0
        assert_eq!(sign_plus_sqrt(&int(3), &int(-2), &int(2)), Ordering::Greater);
        // 2 - sqrt(4) = 0
        assert_eq!(sign_plus_sqrt(&int(2), &int(-1), &int(4)), Ordering::Equal);
        assert_eq!(sign_plus_sqrt(&int(0), &int(-1), &int(0)), Ordering::Equal);
        assert_eq!(sign_plus_sqrt(&int(-1), &int(0), &int(5)), Ordering::Less);
    }

    #[test]
    fn scaled_sqrt_comparisons() {
        assert_eq!(le_half_sqrt(&rat(1, 2), &int(1)), Truth::Holds);
        assert_eq!(lt_half_sqrt(&rat(1, 2), &int(1)), Truth::Fails);
        assert_eq!(le_sqrt(&int(1), &int(-1)), Truth::Undefined);
        assert_eq!(!Truth::Undefined, Truth::Undefined);
    }
}
