//! Diagonal ranges, off-diagonal lower bounds and the `B_min` determinant test.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, rat, sqrt_lower_bound, verify_sqrt_bound_digits, Rational, Side};
use crate::spectral::{det_identity_minus, SymMatrix};

/// Lower and upper bounds on the five diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagBounds {
    pub lower: [Rational; 5],
    pub upper: [Rational; 5],
}

fn max_of(xs: &[Rational]) -> Rational {
    xs.iter().max().expect("non-empty").clone()
}

fn min_of(xs: &[Rational]) -> Rational {
    xs.iter().min().expect("non-empty").clone()
}

/// Which diagonal entries a case's given ranges constrain.
pub fn given_labels(case: u8) -> &'static [&'static str] {
    match case {
        1 => &["b55"],
        2 => &["b11"],
        3 => &["b33", "b55"],
        4 => &["b11", "b33"],
        _ => &[],
    }
}

/// Whole range of each given coordinate, per case.
pub fn case_domain(case: u8) -> Vec<(Rational, Rational)> {
    let (quarter_ish, half) = (rat(26, 100), rat(1, 2));
    match case {
        1 => vec![(int(0), quarter_ish)],
        2 => vec![(int(0), half)],
        3 => vec![(int(0), quarter_ish.clone()), (int(0), quarter_ish)],
        4 => vec![(int(0), half), (int(0), quarter_ish)],
        _ => Vec::new(),
    }
}

/// Diagonal bounds implied by a case's ordering assumptions and the given ranges.
///
/// - case 1: `b55` given; `b55 >= b11`, `b44 >= b33`.
/// - case 2: `b11` given; `b11 >= b55`, `b44 >= b33`.
/// - case 3: `b33`, `b55` given; `b55 >= b11`, `b33 >= b44`.
/// - case 4: `b11`, `b33` given; `b11 >= b55`, `b33 >= b44`.
pub fn derive_diag_bounds(case: u8, given: &[(Rational, Rational)]) -> Result<DiagBounds> {
    let labels = given_labels(case);
    if labels.is_empty() {
        return Err(Error::Input(format!("case must be 1..=4, got {case}")));
    }
    if given.len() != labels.len() {
        return Err(Error::Input(format!(
            "case {case} takes {} range(s), got {}",
            labels.len(),
            given.len()
        )));
    }
    for ((lo, hi), label) in given.iter().zip(labels) {
        if lo > hi {
            return Err(Error::Domain(format!(
                "empty range for {label}: [{}, {}]",
                format_rational(lo),
                format_rational(hi)
            )));
        }
    }
    let z = int(0);
    let h = rat(1, 2);
    let q = |n: i64, d: i64| rat(n, d);
    let (m, big) = match case {
        1 => {
            let (m55, u55) = given[0].clone();
            let m11 = max_of(&[z.clone(), q(1, 8) - &u55 / int(4)]);
            let u11 = min_of(&[q(1, 4), u55.clone(), &h - &m55]);
            let u44 = min_of(&[q(1, 6), u55.clone(), q(1, 4) - &m55 / int(2)]);
            let u33 = min_of(&[q(1, 8), u55.clone(), q(1, 6) - &m55 / int(3)]);
            let u22 = min_of(&[q(1, 10), u55.clone(), q(1, 8) - &m55 / int(4)]);
            ([m11, z.clone(), z.clone(), z.clone(), m55], [u11, u22, u33, u44, u55])
        }
        2 => {
            let (m11, u11) = given[0].clone();
            let u44 = min_of(&[q(1, 4), u11.clone(), &h - &m11]);
            let u55 = u44.clone();
            let u33 = min_of(&[q(1, 6), u11.clone(), q(1, 4) - &m11 / int(2)]);
            let u22 = min_of(&[q(1, 10), u11.clone(), q(1, 8) - &m11 / int(4)]);
            ([m11, z.clone(), z.clone(), z.clone(), z.clone()], [u11, u22, u33, u44, u55])
        }
        3 => {
            let (g33, g55) = (&given[0], &given[1]);
            let m33 = max_of(&[g33.0.clone(), &h - int(4) * &g55.1, q(1, 6) - q(2, 3) * &g55.1]);
            let u33 = min_of(&[g33.1.clone(), &h - &g55.0]);
            let m55 = max_of(&[g55.0.clone(), q(1, 4) - q(3, 2) * &u33, q(1, 8) - &u33 / int(4)]);
            let u55 = min_of(&[g55.1.clone(), &h - &m33]);
            let m11 = max_of(&[z.clone(), q(1, 6) - &u33 / int(3) - &u55 / int(3)]);
            let u11 = min_of(&[u55.clone(), &h - &m33 - &m55, q(1, 4) - &m33 / int(2)]);
            let u44 = min_of(&[
                q(1, 8),
                u33.clone(),
                u55.clone(),
                q(1, 4) - &m33 / int(2) - &m55 / int(2),
                q(1, 6) - &m33 / int(3),
                q(1, 6) - &m55 / int(3),
            ]);
            let u22 = min_of(&[
                q(1, 10),
                u33.clone(),
                u55.clone(),
                q(1, 6) - &m33 / int(3) - &m55 / int(3),
                q(1, 8) - &m33 / int(4),
                q(1, 8) - &m55 / int(4),
            ]);
            ([m11, z.clone(), m33, z.clone(), m55], [u11, u22, u33, u44, u55])
        }
        _ => {
            let (g11, g33) = (&given[0], &given[1]);
            let m11 = max_of(&[g11.0.clone(), q(1, 4) - q(3, 2) * &g33.1, q(1, 8) - &g33.1 / int(4)]);
            let u11 = g11.1.clone();
            let m33 = max_of(&[g33.0.clone(), &h - int(4) * &u11, q(1, 6) - q(2, 3) * &u11]);
            let u33 = min_of(&[g33.1.clone(), &h - &m11]);
            let u44 = min_of(&[
                q(1, 6),
                u11.clone(),
                u33.clone(),
                &h - &m11 - &m33,
                q(1, 4) - &m11 / int(2),
                q(1, 4) - &m33 / int(2),
            ]);
            let u55 = min_of(&[u11.clone(), &h - &m11 - &m33, q(1, 4) - &m33 / int(2)]);
            let u22 = min_of(&[
                q(1, 10),
                u11.clone(),
                u33.clone(),
                q(1, 6) - &m11 / int(3) - &m33 / int(3),
                q(1, 8) - &m11 / int(4),
                q(1, 8) - &m33 / int(4),
            ]);
            ([m11, z.clone(), m33, z.clone(), z.clone()], [u11, u22, u33, u44, u55])
        }
    };
    for i in 0..5 {
        if m[i].is_negative() || m[i] > big[i] {
            return Err(Error::Domain(format!(
                "derived range for b{0}{0} is empty: [{1}, {2}]",
                i + 1,
                format_rational(&m[i]),
                format_rational(&big[i])
            )));
        }
    }
    Ok(DiagBounds { lower: m, upper: big })
}

/// Which candidate supplies the lower bound on `b35`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Selection {
    /// The candidate built from the `b13` bound is strictly larger.
    From13,
    /// The candidate built from the `b45` bound is strictly larger.
    From45,
    /// Both candidates are exactly equal.
    Tie,
}

/// Exact chain of squared bounds plus their decimal lower approximations.
#[derive(Debug, Clone, PartialEq)]
pub struct OffDiagChain {
    pub m12_sq: Rational,
    pub m24_sq: Rational,
    pub r12: Rational,
    pub r12_tilde: Rational,
    /// Square of the upper bound on `b12`.
    pub mt12_sq: Rational,
    pub r24: Rational,
    pub r24_tilde: Rational,
    /// Square of the upper bound on `b24`.
    pub mt24_sq: Rational,
    pub m13_sq: Rational,
    pub m45_sq: Rational,
    pub m35_13_sq: Rational,
    pub m35_45_sq: Rational,
    /// Decimal lower bounds, before the ordering relations are applied.
    pub raw: RawLowerBounds,
    pub digits: u32,
}

/// Decimal lower bounds of the off-diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawLowerBounds {
    pub m12: Rational,
    pub m13: Rational,
    pub m24: Rational,
    pub m35_13: Rational,
    pub m35_45: Rational,
    pub m45: Rational,
}

/// Off-diagonal lower bounds after the ordering relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImprovedBounds {
    pub m12: Rational,
    pub m13: Rational,
    pub m24: Rational,
    pub m35: Rational,
    pub m45: Rational,
    pub selection: Selection,
}

/// Everything one sub-range produces.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineResult {
    pub case: u8,
    pub given: Vec<(Rational, Rational)>,
    pub bounds: DiagBounds,
    pub chain: OffDiagChain,
    pub improved: ImprovedBounds,
    pub bmin: SymMatrix,
    pub p_at_one: Rational,
}

fn positive_or_fail(x: Rational, what: &str) -> Result<Rational> {
    if x.is_positive() {
        Ok(x)
    } else {
        Err(Error::Pipeline(format!("{what} is not positive ({})", format_rational(&x))))
    }
}

fn checked_lower(x: &Rational, digits: u32, what: &str) -> Result<Rational> {
    if x.is_negative() {
        return Err(Error::Pipeline(format!("squared bound {what} is negative")));
    }
    let v = sqrt_lower_bound(x, digits)?;
    if !verify_sqrt_bound_digits(x, &v, digits, Side::Lower)? {
        return Err(Error::Pipeline(format!("decimal bound for {what} failed verification")));
    }
    Ok(v)
}

/// Squared lower bounds on `b12` and `b24`; both increase with every diagonal entry.
pub fn entry_lower_squares(b: &DiagBounds) -> (Rational, Rational) {
    let (one, two, four) = (int(1), int(2), int(4));
    let [m11, m22, m33, m44, m55] = &b.lower;
    let quarter = rat(1, 4);
    (
        &quarter * (&one + &two * m44 + &four * m11 * m22 + &four * m33 * m55),
        &quarter * (&one + &two * m11 + &four * m22 * m44 + &four * m33 * m55),
    )
}

/// Runs the bound chain for the off-diagonal entries at `digits` decimal places.
pub fn offdiag_lower_bounds(b: &DiagBounds, digits: u32) -> Result<OffDiagChain> {
    let one = int(1);
    let two = int(2);
    let four = int(4);
    let [m11, m22, _m33, m44, _m55] = &b.lower;
    let [u11, u22, u33, u44, u55] = &b.upper;
    let quarter = rat(1, 4);
    let (m12_sq, m24_sq) = entry_lower_squares(b);
    let r12 = int(16) * (&one - u33) * (&one - u44) * (&one - &two * u33) * (&one - &two * u44);
    let r24 = int(16) * (&one - u11) * (&one - u55) * (&one - &two * u11) * (&one - &two * u55);
    let r12_tilde = checked_lower(&r12, digits, "r12")?;
    let r24_tilde = checked_lower(&r24, digits, "r24")?;
    let den12 = positive_or_fail(
        &four * (&one - u33) * (&one - u44) + &r12_tilde + (&one - &two * u33) * (&one - &two * u44),
        "denominator of the b12 upper bound",
    )?;
    let den24 = positive_or_fail(
        &four * (&one - u11) * (&one - u55) + &r24_tilde + (&one - &two * u11) * (&one - &two * u55),
        "denominator of the b24 upper bound",
    )?;
    let mt12_sq = &quarter * (int(3) - &two * m11 - &two * u33) * (int(3) - &two * m22 - &two * u44) / den12;
    let mt24_sq = &quarter * (int(3) - &two * u11 - &two * m22) * (int(3) - &two * m44 - &two * u55) / den24;
    let gap12 = positive_or_fail(
        &four * &mt12_sq - (&one - &two * u11) * (&one - &two * u22),
        "4 M12~^2 - (1 - 2 M11)(1 - 2 M22)",
    )?;
    let gap24 = positive_or_fail(
        &four * &mt24_sq - (&one - &two * u22) * (&one - &two * u44),
        "4 M24~^2 - (1 - 2 M22)(1 - 2 M44)",
    )?;
    let m13_sq = &quarter * (&one - &two * u33) * (&one - &two * u11 + &four * (&one - &two * u44) * &m12_sq / &gap24);
    let m45_sq = &quarter * (&one - &two * u55) * (&one - &two * u44 + &four * (&one - &two * u11) * &m24_sq / &gap12);
    let m35_13_sq = &quarter * (&one - &two * u55) * (&one - &two * u33 + &four * (&one - &two * u22) * &m13_sq / &gap12);
    let m35_45_sq = &quarter * (&one - &two * u33) * (&one - &two * u55 + &four * (&one - &two * u22) * &m45_sq / &gap24);
    let raw = RawLowerBounds {
        m12: checked_lower(&m12_sq, digits, "m12")?,
        m13: checked_lower(&m13_sq, digits, "m13")?,
        m24: checked_lower(&m24_sq, digits, "m24")?,
        m35_13: checked_lower(&m35_13_sq, digits, "m35 from b13")?,
        m35_45: checked_lower(&m35_45_sq, digits, "m35 from b45")?,
        m45: checked_lower(&m45_sq, digits, "m45")?,
    };
    Ok(OffDiagChain {
        m12_sq,
        m24_sq,
        r12,
        r12_tilde,
        mt12_sq,
        r24,
        r24_tilde,
        mt24_sq,
        m13_sq,
        m45_sq,
        m35_13_sq,
        m35_45_sq,
        raw,
        digits,
    })
}

/// Applies the ordering relations `b12 >= b35`, `b24 >= b35`, `b45 >= b13`, and in
/// cases 3 and 4 (where `b33 >= b44`) also `b24 >= b13`.
///
/// The `b35` bound is the larger decimal candidate. The selection is decided on the
/// exact squared candidates, and an exact tie is recorded as such.
pub fn apply_relations(case: u8, chain: &OffDiagChain) -> ImprovedBounds {
    let raw = &chain.raw;
    let selection = match chain.m35_13_sq.cmp(&chain.m35_45_sq) {
        std::cmp::Ordering::Greater => Selection::From13,
        std::cmp::Ordering::Less => Selection::From45,
        std::cmp::Ordering::Equal => Selection::Tie,
    };
    let m35 = raw.m35_13.clone().max(raw.m35_45.clone());
    let m12 = raw.m12.clone().max(m35.clone());
    let mut m24 = raw.m24.clone().max(m35.clone());
    let m45 = raw.m45.clone().max(raw.m13.clone());
    if matches!(case, 3 | 4) {
        m24 = m24.max(raw.m13.clone());
    }
    ImprovedBounds { m12, m13: raw.m13.clone(), m24, m35, m45, selection }
}

/// Assembles `B_min` (pattern C, diagonal from the lower diagonal bounds) and returns
/// it with `det(I - B_min)`.
pub fn build_bmin_and_eval(improved: &ImprovedBounds, lower_diag: &[Rational; 5]) -> (SymMatrix, Rational) {
    let mut b = SymMatrix::diag_exact(lower_diag);
    b.set_exact(0, 1, improved.m12.clone());
    b.set_exact(0, 2, improved.m13.clone());
    b.set_exact(1, 3, improved.m24.clone());
    b.set_exact(2, 4, improved.m35.clone());
    b.set_exact(3, 4, improved.m45.clone());
    let p = det_identity_minus(&b).expect("exact matrix");
    (b, p)
}

/// Full pipeline for one sub-range.
pub fn run_subrange(case: u8, given: &[(Rational, Rational)], digits: u32) -> Result<PipelineResult> {
    let bounds = derive_diag_bounds(case, given)?;
    let chain = offdiag_lower_bounds(&bounds, digits)?;
    let improved = apply_relations(case, &chain);
    let (bmin, p_at_one) = build_bmin_and_eval(&improved, &bounds.lower);
    if !bmin_respects_lower_bounds(&bmin, &bounds, &chain) {
        return Err(Error::Pipeline("B_min exceeds a certified lower bound".into()));
    }
    Ok(PipelineResult { case, given: given.to_vec(), bounds, chain, improved, bmin, p_at_one })
}

/// Each decimal entry of `B_min` is at most the exact bound it approximates,
/// after the ordering relations are taken into account.
fn bmin_respects_lower_bounds(b: &SymMatrix, bounds: &DiagBounds, chain: &OffDiagChain) -> bool {
    let sq = |i: usize, j: usize| {
        let v = b.get_exact(i, j).unwrap();
        v * v
    };
    let m35_sq = chain.m35_13_sq.clone().max(chain.m35_45_sq.clone());
    let diag_ok = (0..5).all(|i| b.get_exact(i, i) == Some(&bounds.lower[i]));
    diag_ok
        && sq(0, 2) <= chain.m13_sq
        && sq(2, 4) <= m35_sq
        && sq(0, 1) <= chain.m12_sq.clone().max(m35_sq.clone())
        && sq(1, 3) <= chain.m24_sq.clone().max(m35_sq.clone()).max(chain.m13_sq.clone())
        && sq(3, 4) <= chain.m45_sq.clone().max(chain.m13_sq.clone())
        && !b.get_exact(0, 3).is_some_and(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_surd_square;

    fn r(p: i64) -> Rational {
        rat(p, 100)
    }

    #[test]
    fn case_one_diagonals() {
        let b = derive_diag_bounds(1, &[(r(0), r(20))]).unwrap();
        assert_eq!(b.lower[0], rat(3, 40));
        assert_eq!(b.upper[1..4], [rat(1, 10), rat(1, 8), rat(1, 6)]);
    }

    #[test]
    fn case_three_diagonals() {
        let b = derive_diag_bounds(3, &[(r(12), r(26)), (r(18), r(21))]).unwrap();
        assert_eq!(b.lower[0], rat(1, 100));
        assert_eq!(b.upper[4], rat(21, 100));
        assert_eq!(b.upper[1], rat(1, 15));
    }

    #[test]
    fn case_two_last_range() {
        // printed sub-range 6 starts at 36/100: min{1/10, M11, 1/8 - m11/4} = 7/200
        let b = derive_diag_bounds(2, &[(r(36), r(50))]).unwrap();
        assert_eq!(b.upper[1], rat(7, 200));
        let b = derive_diag_bounds(2, &[(r(40), r(50))]).unwrap();
        assert_eq!(b.upper[1], rat(1, 40));
    }

    #[test]
    fn bad_ranges() {
        assert!(matches!(derive_diag_bounds(1, &[(r(30), r(20))]), Err(Error::Domain(_))));
        assert!(matches!(derive_diag_bounds(5, &[(r(0), r(20))]), Err(Error::Input(_))));
        assert!(matches!(derive_diag_bounds(3, &[(r(0), r(20))]), Err(Error::Input(_))));
    }

    #[test]
    fn worked_example() {
        let res = run_subrange(3, &[(r(12), r(26)), (r(18), r(21))], 2).unwrap();
        let c = &res.chain;
        assert_eq!(c.m12_sq, rat(679, 2500));
        assert_eq!(c.r12, rat(63936, 15625));
        assert_eq!(c.r12_tilde, rat(101, 50));
        assert_eq!(c.mt12_sq, parse_surd_square("√44526/362").unwrap());
        assert_eq!(c.raw.m12, rat(13, 25));
        assert_eq!(c.raw.m13, rat(47, 100));
        assert_eq!(c.raw.m24, rat(13, 25));
        assert_eq!(c.raw.m35_13, rat(9, 20));
        assert_eq!(c.raw.m35_45, rat(9, 20));
        assert_eq!(c.raw.m45, rat(12, 25));
        assert_eq!(res.p_at_one, rat(-7419049, 156250000));
    }

    #[test]
    fn collapsed_ranges() {
        let z = DiagBounds { lower: std::array::from_fn(|_| int(0)), upper: std::array::from_fn(|_| int(0)) };
        let (m12_sq, m24_sq) = entry_lower_squares(&z);
        assert_eq!(m12_sq, rat(1, 4));
        assert_eq!(m24_sq, rat(1, 4));
        assert_eq!(sqrt_lower_bound(&m12_sq, 2).unwrap(), rat(1, 2));
        // the b12 upper bound collapses to 1/2 and the next denominator vanishes
        match offdiag_lower_bounds(&z, 2) {
            Err(Error::Pipeline(msg)) => assert!(msg.contains("M12~")),
            other => panic!("expected a pipeline error, got {other:?}"),
        }
    }
}
