//! The five-by-five pattern with diagonal `(1/2 - t - s, 0, t, s, 0)` and
//! off-diagonal entries at (1,2), (1,3), (2,4), (2,5), (3,5), (4,5).
//!
//! Exact predicates for every bound used against this pattern, a registry of
//! the derived expressions, and step-by-step replays of the algebraic
//! certificates behind them.

mod appendix;
mod expressions;
mod identities;
mod predicates;

pub use appendix::{verify_appendix_a, verify_appendix_ab, verify_appendix_b};
pub use expressions::{HExpressions, SurdForm, SurdValue};
pub use identities::verify_h_identities;
pub use predicates::{dual_name, h_predicates, lambda3_certified, PREDICATE_NAMES};

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, rat, Rational};
use crate::poly::MultiPoly;
use crate::spectral::SymMatrix;

/// Free parameters of the pattern; all nonnegative with `t + s <= 1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HParams {
    pub t: Rational,
    pub s: Rational,
    pub a12: Rational,
    pub a13: Rational,
    pub a24: Rational,
    pub a25: Rational,
    pub a35: Rational,
    pub a45: Rational,
}

/// Symbol names in [`symbolic_h`], in field order.
pub const H_SYMBOLS: [&str; 8] = ["t", "s", "a12", "a13", "a24", "a25", "a35", "a45"];

impl HParams {
    /// Parameters with every entry zero.
    pub fn zero() -> Self {
        let z = rat(0, 1);
        Self {
            t: z.clone(),
            s: z.clone(),
            a12: z.clone(),
            a13: z.clone(),
            a24: z.clone(),
            a25: z.clone(),
            a35: z.clone(),
            a45: z,
        }
    }

    /// Builds from values in [`H_SYMBOLS`] order.
    pub fn from_array(v: [Rational; 8]) -> Self {
        let [t, s, a12, a13, a24, a25, a35, a45] = v;
        Self { t, s, a12, a13, a24, a25, a35, a45 }
    }

    pub fn to_array(&self) -> [Rational; 8] {
        [
            self.t.clone(),
            self.s.clone(),
            self.a12.clone(),
            self.a13.clone(),
            self.a24.clone(),
            self.a25.clone(),
            self.a35.clone(),
            self.a45.clone(),
        ]
    }

    /// Name/value pairs for polynomial evaluation.
    pub fn assignment(&self) -> Vec<(&'static str, Rational)> {
        H_SYMBOLS.iter().copied().zip(self.to_array()).collect()
    }

    /// Checks nonnegativity and `t + s <= 1/2`.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in self.assignment() {
            if v.is_negative() {
                return Err(Error::Domain(format!("{name} = {} is negative", format_rational(&v))));
            }
        }
        if &self.t + &self.s > rat(1, 2) {
            return Err(Error::Domain("t + s exceeds 1/2".into()));
        }
        Ok(())
    }

    /// The mirrored parameters: `t -> 1/2 - t - s`, `a12 <-> a35`, `a24 <-> a45`.
    ///
    /// The matrix built from the mirror is a permutation similarity of the original.
    pub fn dual(&self) -> Self {
        Self {
            t: rat(1, 2) - &self.t - &self.s,
            s: self.s.clone(),
            a12: self.a35.clone(),
            a13: self.a13.clone(),
            a24: self.a45.clone(),
            a25: self.a25.clone(),
            a35: self.a12.clone(),
            a45: self.a24.clone(),
        }
    }

    /// The leading diagonal entry `1/2 - t - s`.
    pub fn a11(&self) -> Rational {
        rat(1, 2) - &self.t - &self.s
    }
}

/// Serializable view with rationals as text.
#[derive(Debug, Clone, Serialize)]
pub struct HParamsText {
    pub t: String,
    pub s: String,
    pub a12: String,
    pub a13: String,
    pub a24: String,
    pub a25: String,
    pub a35: String,
    pub a45: String,
}

impl From<&HParams> for HParamsText {
    fn from(p: &HParams) -> Self {
        let f = format_rational;
        Self {
            t: f(&p.t),
            s: f(&p.s),
            a12: f(&p.a12),
            a13: f(&p.a13),
            a24: f(&p.a24),
            a25: f(&p.a25),
            a35: f(&p.a35),
            a45: f(&p.a45),
        }
    }
}

/// Positions (0-based) of the off-diagonal entries, in field order after `t, s`.
const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 4)];

/// The exact matrix for valid parameters.
pub fn build_h(p: &HParams) -> Result<SymMatrix> {
    p.validate()?;
    let mut m = SymMatrix::zeros_exact(5);
    m.set_exact(0, 0, p.a11());
    m.set_exact(2, 2, p.t.clone());
    m.set_exact(3, 3, p.s.clone());
    let values = [&p.a12, &p.a13, &p.a24, &p.a25, &p.a35, &p.a45];
    for ((i, j), v) in OFF_DIAGONAL.iter().zip(values) {
        m.set_exact(*i, *j, v.clone());
    }
    Ok(m)
}

/// The matrix with symbolic entries in [`H_SYMBOLS`].
pub fn symbolic_h() -> Vec<Vec<MultiPoly>> {
    let mut m = vec![vec![MultiPoly::zero(); 5]; 5];
    m[0][0] = crate::replay::poly("1/2 - t - s");
    m[2][2] = MultiPoly::var("t");
    m[3][3] = MultiPoly::var("s");
    for ((i, j), name) in OFF_DIAGONAL.iter().zip(&H_SYMBOLS[2..]) {
        m[*i][*j] = MultiPoly::var(name);
        m[*j][*i] = MultiPoly::var(name);
    }
    m
}

/// `det(lambda I - M[idx])` for a symbolic matrix and 0-based indices.
pub fn char_poly_at(m: &[Vec<MultiPoly>], idx: &[usize], lambda: &MultiPoly) -> MultiPoly {
    let sub: Vec<Vec<MultiPoly>> = idx
        .iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| {
                    let e = m[i][j].neg();
                    if i == j {
                        e.add(lambda)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    crate::ring::det(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::spectral::charpoly_exact;

    fn sample() -> HParams {
        HParams::from_array([rat(1, 10), rat(1, 5), rat(1, 3), rat(2, 7), rat(3, 5), rat(1, 9), rat(1, 4), rat(5, 8)])
    }

    #[test]
    fn zero_params_give_single_entry() {
        let m = build_h(&HParams::zero()).unwrap();
        assert_eq!(m.trace_exact().unwrap(), rat(1, 2));
        assert_eq!(m.get_exact(0, 0).unwrap(), &rat(1, 2));
    }

    #[test]
    fn trace_and_pattern() {
        let m = build_h(&sample()).unwrap();
        assert_eq!(m.trace_exact().unwrap(), rat(1, 2));
        for (i, j) in [(0, 3), (0, 4), (1, 2), (2, 3)] {
            assert_eq!(m.get_exact(i, j).unwrap(), &int(0));
        }
        let cp = charpoly_exact(&m).unwrap();
        assert_eq!(cp.degree(), Some(5));
        assert_eq!(cp.leading(), int(1));
    }

    #[test]
    fn invalid_params_rejected() {
        let mut p = sample();
        p.t = rat(2, 5);
        assert!(matches!(build_h(&p), Err(Error::Domain(_))));
        let mut p = sample();
        p.a13 = rat(-1, 5);
        assert!(build_h(&p).is_err());
    }

    #[test]
    fn dual_is_involution() {
        let p = sample();
        assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn symbolic_matches_exact() {
        let p = sample();
        let sym = symbolic_h();
        let m = build_h(&p).unwrap();
        let asg = p.assignment();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(&sym[i][j].eval(&asg).unwrap(), m.get_exact(i, j).unwrap());
            }
        }
    }
}
