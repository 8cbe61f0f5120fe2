//! The five-by-five pattern with zeros at (1,4), (1,5), (2,3), (2,5), (3,4), and
//! exact truth values for the bound chain used against it.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, rat, Rational};
use crate::inequality::{sign_plus_sqrt, PredicateSet, Truth};
use crate::poly::MultiPoly;
use crate::spectral::SymMatrix;

/// Entries of the pattern: five diagonal and five off-diagonal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CParams {
    pub b11: Rational,
    pub b22: Rational,
    pub b33: Rational,
    pub b44: Rational,
    pub b55: Rational,
    pub b12: Rational,
    pub b13: Rational,
    pub b24: Rational,
    pub b35: Rational,
    pub b45: Rational,
}

/// Symbol names in field order.
pub const C_SYMBOLS: [&str; 10] = ["b11", "b22", "b33", "b44", "b55", "b12", "b13", "b24", "b35", "b45"];

/// Positions (0-based) of the off-diagonal entries, in field order.
pub const C_OFF_DIAGONAL: [(usize, usize); 5] = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)];

impl CParams {
    /// Builds from values in [`C_SYMBOLS`] order.
    pub fn from_array(v: [Rational; 10]) -> Self {
        let [b11, b22, b33, b44, b55, b12, b13, b24, b35, b45] = v;
        Self { b11, b22, b33, b44, b55, b12, b13, b24, b35, b45 }
    }

    pub fn to_array(&self) -> [Rational; 10] {
        [
            self.b11.clone(),
            self.b22.clone(),
            self.b33.clone(),
            self.b44.clone(),
            self.b55.clone(),
            self.b12.clone(),
            self.b13.clone(),
            self.b24.clone(),
            self.b35.clone(),
            self.b45.clone(),
        ]
    }

    pub fn diagonal(&self) -> [Rational; 5] {
        [self.b11.clone(), self.b22.clone(), self.b33.clone(), self.b44.clone(), self.b55.clone()]
    }

    pub fn assignment(&self) -> Vec<(&'static str, Rational)> {
        C_SYMBOLS.iter().copied().zip(self.to_array()).collect()
    }

    pub fn trace(&self) -> Rational {
        self.diagonal().iter().sum()
    }

    /// Checks that every entry is nonnegative.
    pub fn validate_entries(&self) -> Result<()> {
        for (name, v) in self.assignment() {
            if v.is_negative() {
                return Err(Error::Domain(format!("{name} = {} is negative", format_rational(&v))));
            }
        }
        Ok(())
    }

    /// Checks nonnegativity and trace exactly 1/2.
    pub fn validate(&self) -> Result<()> {
        self.validate_entries()?;
        if self.trace() != rat(1, 2) {
            return Err(Error::Domain(format!("trace is {}, expected 1/2", format_rational(&self.trace()))));
        }
        Ok(())
    }

    /// Reads the pattern entries of a 5x5 exact matrix; other entries must be zero.
    pub fn from_matrix(m: &SymMatrix) -> Result<Self> {
        if m.order() != 5 {
            return Err(Error::Input("pattern matrices have order 5".into()));
        }
        let get = |i: usize, j: usize| {
            m.get_exact(i, j).cloned().ok_or_else(|| Error::Mode("exact matrix required".into()))
        };
        for (i, j) in [(0, 3), (0, 4), (1, 2), (1, 4), (2, 3)] {
            if !get(i, j)?.is_zero() {
                return Err(Error::Input(format!("entry ({}, {}) must be zero", i + 1, j + 1)));
            }
        }
        Ok(Self {
            b11: get(0, 0)?,
            b22: get(1, 1)?,
            b33: get(2, 2)?,
            b44: get(3, 3)?,
            b55: get(4, 4)?,
            b12: get(0, 1)?,
            b13: get(0, 2)?,
            b24: get(1, 3)?,
            b35: get(2, 4)?,
            b45: get(3, 4)?,
        })
    }
}

/// Serializable view with rationals as text.
#[derive(Debug, Clone, Serialize)]
pub struct CParamsText {
    pub diagonal: [String; 5],
    pub b12: String,
    pub b13: String,
    pub b24: String,
    pub b35: String,
    pub b45: String,
}

impl From<&CParams> for CParamsText {
    fn from(p: &CParams) -> Self {
        let f = format_rational;
        Self {
            diagonal: p.diagonal().map(|v| f(&v)),
            b12: f(&p.b12),
            b13: f(&p.b13),
            b24: f(&p.b24),
            b35: f(&p.b35),
            b45: f(&p.b45),
        }
    }
}

/// The exact matrix; entries must be nonnegative, the trace is not constrained.
pub fn build_c(p: &CParams) -> Result<SymMatrix> {
    p.validate_entries()?;
    let mut m = SymMatrix::diag_exact(&p.diagonal());
    let values = [&p.b12, &p.b13, &p.b24, &p.b35, &p.b45];
    for ((i, j), v) in C_OFF_DIAGONAL.iter().zip(values) {
        m.set_exact(*i, *j, v.clone());
    }
    Ok(m)
}

/// The matrix with symbolic entries named by [`C_SYMBOLS`].
pub fn symbolic_c() -> Vec<Vec<MultiPoly>> {
    let mut m = vec![vec![MultiPoly::zero(); 5]; 5];
    for (i, name) in C_SYMBOLS[..5].iter().enumerate() {
        m[i][i] = MultiPoly::var(name);
    }
    for ((i, j), name) in C_OFF_DIAGONAL.iter().zip(&C_SYMBOLS[5..]) {
        m[*i][*j] = MultiPoly::var(name);
        m[*j][*i] = MultiPoly::var(name);
    }
    m
}

/// Predicate names in report order.
pub const C_PREDICATE_NAMES: [&str; 34] = [
    "trace_half",
    "min_diagonal_b22",
    "b22_small",
    "max_diagonal",
    "b11_geq_b44",
    "off_diagonal_positive",
    "applicable",
    "b12_geq_b35",
    "b24_geq_b35",
    "b45_geq_b13",
    "b24_geq_b13",
    "b12_upper",
    "b45_upper",
    "b12_sufficient",
    "b12_lower",
    "b45_sufficient",
    "b45_lower",
    "b24_upper",
    "b13_upper",
    "b24_sufficient",
    "b24_lower",
    "b13_sufficient",
    "b13_lower",
    "b35_sufficient_plain",
    "b35_sufficient_2345",
    "b35_sufficient_1235",
    "b45_better_upper",
    "b13_better_upper",
    "b24_better_lower",
    "b12_better_lower",
    "b24_better_upper",
    "b12_better_upper",
    "zero_off_diagonal",
    "lambda3_certified",
];

fn sq(x: &Rational) -> Rational {
    x * x
}

/// `(1 - bii)(1 - bjj)`.
fn q(a: &Rational, b: &Rational) -> Rational {
    (int(1) - a) * (int(1) - b)
}

/// `(1 - 2 bii)(1 - 2 bjj)`.
fn r(a: &Rational, b: &Rational) -> Rational {
    (int(1) - int(2) * a) * (int(1) - int(2) * b)
}

/// `y <= sqrt(outer (inner - num / den))` with both radicand factors checked.
fn le_root_of_difference(y: &Rational, outer: &Rational, inner: &Rational, num: &Rational, den: &Rational) -> Truth {
    if !den.is_positive() {
        return Truth::Undefined;
    }
    let radicand = outer * (inner - num / den);
    if radicand.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(sq(y) <= radicand)
}

/// `y <= (1/2) sqrt(outer (inner + num / den))`, undefined when `den <= 0`.
fn le_half_root_of_sum(y: &Rational, outer: &Rational, inner: &Rational, num: &Rational, den: &Rational) -> Truth {
    if !den.is_positive() {
        return Truth::Undefined;
    }
    let radicand = outer * (inner + num / den);
    if radicand.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(int(4) * sq(y) <= radicand)
}

/// `y < sqrt(k) / (2 (2 sqrt(qv) + sqrt(rv)))`, decided without radicals.
///
/// Squared: `4 y^2 (4 qv + rv) - k + 16 y^2 sqrt(qv rv) < 0`.
fn lt_nested_bound(y: &Rational, k: &Rational, qv: &Rational, rv: &Rational) -> Truth {
    if k.is_negative() || qv.is_negative() || rv.is_negative() || (qv.is_zero() && rv.is_zero()) {
        return Truth::Undefined;
    }
    let y2 = sq(y);
    let a = int(4) * &y2 * (int(4) * qv + rv) - k;
    let b = int(16) * &y2;
    Truth::from_bool(sign_plus_sqrt(&a, &b, &(qv * rv)) == Ordering::Less)
}

/// `y < (1/2) sqrt((4 w^2 / d1 - e1)(4 w^2 / d2 - e2))`.
fn lt_product_bound(y: &Rational, w: &Rational, d1: &Rational, e1: &Rational, d2: &Rational, e2: &Rational) -> Truth {
    if !d1.is_positive() || !d2.is_positive() {
        return Truth::Undefined;
    }
    let f1 = int(4) * sq(w) / d1 - e1;
    let f2 = int(4) * sq(w) / d2 - e2;
    let radicand = f1 * f2;
    if radicand.is_negative() {
        return Truth::Undefined;
    }
    Truth::from_bool(int(4) * sq(y) < radicand)
}

/// Guard for a conditional bound: the premise must hold for the bound to be decided.
fn given(premise: Truth, value: Truth) -> Truth {
    if premise.holds() {
        value
    } else {
        Truth::Undefined
    }
}

/// Exact truth values of the assumptions, relations and bounds, in
/// [`C_PREDICATE_NAMES`] order.
///
/// Entries must be nonnegative; a trace other than 1/2 is reported through
/// `trace_half` (and `applicable`) rather than rejected, so lower-bound matrices
/// can be inspected too.
pub fn c_predicates(p: &CParams) -> Result<PredicateSet> {
    p.validate_entries()?;
    let (b11, b22, b33, b44, b55) = (&p.b11, &p.b22, &p.b33, &p.b44, &p.b55);
    let (b12, b13, b24, b35, b45) = (&p.b12, &p.b13, &p.b24, &p.b35, &p.b45);
    let one = int(1);
    let two = int(2);
    let four = int(4);
    let half = rat(1, 2);
    let mut out = PredicateSet::default();

    let trace_half = Truth::from_bool(p.trace() == half);
    out.push("trace_half", trace_half);
    let diag = p.diagonal();
    let min_b22 = Truth::from_bool(diag.iter().all(|d| b22 <= d));
    out.push("min_diagonal_b22", min_b22);
    out.push("b22_small", Truth::from_bool(b22 <= &rat(1, 10)));
    let max_diag = (b11 + b44).is_positive()
        && b11 < &half
        && b33.is_positive()
        && b33 < &half
        && b44 < &half
        && b55.is_positive()
        && b55 < &half;
    out.push("max_diagonal", Truth::from_bool(max_diag));
    out.push("b11_geq_b44", Truth::from_bool(b11 >= b44 && b11.is_positive()));
    let positive = [b12, b13, b24, b35, b45].iter().all(|v| v.is_positive());
    out.push("off_diagonal_positive", Truth::from_bool(positive));
    let applicable = trace_half.holds() && min_b22.holds() && b22 <= &rat(1, 10) && max_diag && b11 >= b44 && positive;
    out.push("applicable", Truth::from_bool(applicable));

    out.push("b12_geq_b35", Truth::from_bool(b12 >= b35));
    out.push("b24_geq_b35", Truth::from_bool(b24 >= b35));
    out.push("b45_geq_b13", Truth::from_bool(b45 >= b13));
    out.push("b24_geq_b13", given(Truth::from_bool(b33 >= b44), Truth::from_bool(b24 >= b13)));

    let (q12, q24) = (q(b11, b22), q(b22, b44));
    let (r12, r24) = (r(b11, b22), r(b22, b44));

    out.push("b12_upper", Truth::from_bool(sq(b12) < q12));
    out.push(
        "b45_upper",
        le_root_of_difference(b45, &(&one - b55), &(&one - b44), &((&one - b11) * sq(b24)), &(&q12 - sq(b12))),
    );
    let b12_sufficient = Truth::from_bool(&four * sq(b12) <= r12);
    let b12_lower = !b12_sufficient;
    out.push("b12_sufficient", b12_sufficient);
    out.push("b12_lower", b12_lower);
    let d12 = &four * sq(b12) - &r12;
    let b45_sufficient = given(
        b12_lower,
        le_half_root_of_sum(b45, &(&one - &two * b55), &(&one - &two * b44), &(&four * (&one - &two * b11) * sq(b24)), &d12),
    );
    out.push("b45_sufficient", b45_sufficient);
    out.push("b45_lower", !b45_sufficient);

    out.push("b24_upper", Truth::from_bool(sq(b24) < q24));
    out.push(
        "b13_upper",
        le_root_of_difference(b13, &(&one - b33), &(&one - b11), &((&one - b44) * sq(b12)), &(&q24 - sq(b24))),
    );
    let b24_sufficient = Truth::from_bool(&four * sq(b24) <= r24);
    let b24_lower = !b24_sufficient;
    out.push("b24_sufficient", b24_sufficient);
    out.push("b24_lower", b24_lower);
    let d24 = &four * sq(b24) - &r24;
    let b13_sufficient = given(
        b24_lower,
        le_half_root_of_sum(b13, &(&one - &two * b33), &(&one - &two * b11), &(&four * (&one - &two * b44) * sq(b12)), &d24),
    );
    out.push("b13_sufficient", b13_sufficient);
    out.push("b13_lower", !b13_sufficient);

    let b35_plain = Truth::from_bool(&four * sq(b35) <= r(b33, b55));
    out.push("b35_sufficient_plain", b35_plain);
    let b35_2345 = given(
        b24_lower,
        le_half_root_of_sum(b35, &(&one - &two * b33), &(&one - &two * b55), &(&four * (&one - &two * b22) * sq(b45)), &d24),
    );
    out.push("b35_sufficient_2345", b35_2345);
    let b35_1235 = given(
        b12_lower,
        le_half_root_of_sum(b35, &(&one - &two * b55), &(&one - &two * b33), &(&four * (&one - &two * b22) * sq(b13)), &d12),
    );
    out.push("b35_sufficient_1235", b35_1235);

    let (e22, e33, e44, e55, e11) = (
        &one - &two * b22,
        &one - &two * b33,
        &one - &two * b44,
        &one - &two * b55,
        &one - &two * b11,
    );
    out.push("b45_better_upper", lt_product_bound(b45, b24, &e22, &e44, &e33, &e55));
    out.push("b13_better_upper", lt_product_bound(b13, b12, &e22, &e11, &e55, &e33));
    out.push(
        "b24_better_lower",
        Truth::from_bool(&four * sq(b24) > &one + &two * b11 + &four * b22 * b44 + &four * b33 * b55),
    );
    out.push(
        "b12_better_lower",
        Truth::from_bool(&four * sq(b12) > &one + &two * b44 + &four * b11 * b22 + &four * b33 * b55),
    );
    let three = int(3);
    out.push(
        "b24_better_upper",
        lt_nested_bound(
            b24,
            &((&three - &two * b11 - &two * b22) * (&three - &two * b44 - &two * b55)),
            &q(b11, b55),
            &r(b11, b55),
        ),
    );
    out.push(
        "b12_better_upper",
        lt_nested_bound(
            b12,
            &((&three - &two * b11 - &two * b33) * (&three - &two * b22 - &two * b44)),
            &q(b33, b44),
            &r(b33, b44),
        ),
    );

    let zero_off = [b12, b13, b24, b35, b45].iter().any(|v| v.is_zero());
    out.push("zero_off_diagonal", Truth::from_bool(zero_off));

    // The 3x3 certificates need a trace of at most 1/2; the 4x4 lower-bound
    // branches additionally need every diagonal entry below 1/2.
    let trace_ok = p.trace() <= half;
    let below_half = diag.iter().all(|d| d < &half);
    let strict = below_half && positive;
    let certified = trace_ok
        && (zero_off
            || b12_sufficient.holds()
            || b24_sufficient.holds()
            || b35_plain.holds()
            || (strict && (b45_sufficient.holds() || b13_sufficient.holds() || b35_2345.holds() || b35_1235.holds())));
    out.push("lambda3_certified", Truth::from_bool(certified));
    Ok(out)
}

/// True when the exact predicates alone prove that the third eigenvalue is at most 1/2.
pub fn lambda3_certified(p: &CParams) -> Result<bool> {
    Ok(c_predicates(p)?.at("lambda3_certified").holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{eigen_jacobi, ORACLE_TOL};

    fn params(v: [(i64, i64); 10]) -> CParams {
        CParams::from_array(v.map(|(n, d)| rat(n, d)))
    }

    #[test]
    fn single_diagonal_entry_is_not_applicable() {
        let p = params([(1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let set = c_predicates(&p).unwrap();
        assert_eq!(set.at("off_diagonal_positive"), Truth::Fails);
        assert_eq!(set.at("max_diagonal"), Truth::Fails);
        assert_eq!(set.at("applicable"), Truth::Fails);
        assert_eq!(set.at("lambda3_certified"), Truth::Holds);
    }

    #[test]
    fn pattern_layout() {
        let p = params([(1, 10), (0, 1), (1, 5), (1, 10), (1, 10), (1, 2), (1, 3), (2, 5), (1, 4), (3, 5)]);
        let m = build_c(&p).unwrap();
        assert_eq!(m.get_exact(1, 3).unwrap(), &rat(2, 5));
        assert_eq!(m.get_exact(4, 2).unwrap(), &rat(1, 4));
        assert_eq!(CParams::from_matrix(&m).unwrap(), p);
        let sym = symbolic_c();
        let asg = p.assignment();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(&sym[i][j].eval(&asg).unwrap(), m.get_exact(i, j).unwrap());
            }
        }
    }

    #[test]
    fn names_match_order() {
        let p = params([(1, 10), (0, 1), (1, 5), (1, 10), (1, 10), (1, 2), (1, 3), (2, 5), (1, 4), (3, 5)]);
        let set = c_predicates(&p).unwrap();
        let names: Vec<&str> = set.names().collect();
        assert_eq!(names, C_PREDICATE_NAMES);
    }

    #[test]
    fn certified_matrices_have_small_third_eigenvalue() {
        let p = params([(1, 10), (1, 20), (1, 5), (1, 10), (1, 20), (1, 5), (3, 10), (1, 5), (1, 4), (3, 10)]);
        assert!(lambda3_certified(&p).unwrap());
        let spec = eigen_jacobi(&build_c(&p).unwrap().to_float(), ORACLE_TOL).unwrap();
        assert!(spec.values[2] <= 0.5 + 1e-10);
    }

    #[test]
    fn nested_bound_matches_float() {
        // sqrt(k) / (2 (2 sqrt(q) + sqrt(r))) with k = 4, q = 1, r = 1 is 1/3.
        assert_eq!(lt_nested_bound(&rat(1, 3), &int(4), &int(1), &int(1)), Truth::Fails);
        assert_eq!(lt_nested_bound(&rat(33, 100), &int(4), &int(1), &int(1)), Truth::Holds);
        assert_eq!(lt_nested_bound(&rat(34, 100), &int(4), &int(1), &int(1)), Truth::Fails);
    }
}
