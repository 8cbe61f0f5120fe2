//! Sturm chains, real-root isolation and certified sign classification.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::exact::{format_decimal, format_rational, pow10, Rational};

/// Interval with rational endpoints and independent closedness flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi, lo_closed: true, hi_closed: true }
    }

    /// `[lo, hi)`.
    pub fn closed_open(lo: Rational, hi: Rational) -> Self {
        Self { hi_closed: false, ..Self::closed(lo, hi) }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        Self { lo_closed: false, hi_closed: false, ..Self::closed(lo, hi) }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { x >= &self.lo } else { x > &self.lo };
        let below = if self.hi_closed { x <= &self.hi } else { x < &self.hi };
        above && below
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

/// Certified sign of a polynomial over an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignClass {
    StrictlyPositive,
    StrictlyNegative,
    /// `>= 0` with at least one zero in the interval.
    Nonnegative,
    /// `<= 0` with at least one zero in the interval.
    Nonpositive,
    /// Identically zero on the interval.
    Zero,
    Mixed,
}

impl SignClass {
    pub fn is_nonnegative(self) -> bool {
        matches!(self, Self::StrictlyPositive | Self::Nonnegative | Self::Zero)
    }

    pub fn is_nonpositive(self) -> bool {
        matches!(self, Self::StrictlyNegative | Self::Nonpositive | Self::Zero)
    }
}

/// Signed remainder sequence of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the signs and tames coefficient growth
            let lead = r.leading().abs();
            chain.push(r.neg().scale(&(Rational::one() / lead)));
        }
        Self { chain }
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Sign variations at a finite point, zeros dropped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::count_changes(self.chain.iter().map(|p| sign_of(&p.eval(x))))
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count_changes(self.chain.iter().map(|p| {
            let s = sign_of(&p.leading());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

fn sign_of(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots, by Sturm's theorem on the square-free part.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("zero polynomial has every real number as a root".into()));
    }
    Ok(SturmChain::new(&p.square_free()).count_all())
}

/// Number of distinct roots of `p` that lie in `interval`.
pub fn count_roots_in(p: &UniPoly, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("zero polynomial has every real number as a root".into()));
    }
    let sf = p.square_free();
    let chain = SturmChain::new(&sf);
    let (lo, hi) = (&interval.lo, &interval.hi);
    if lo == hi {
        return Ok(usize::from(interval.lo_closed && interval.hi_closed && sf.eval(lo).is_zero()));
    }
    let mut n = chain.count_half_open(lo, hi);
    if !interval.hi_closed && sf.eval(hi).is_zero() {
        n -= 1;
    }
    if interval.lo_closed && sf.eval(lo).is_zero() {
        n += 1;
    }
    Ok(n)
}

/// One isolating interval per distinct real root, ascending, each of width at most `10^-digits`.
///
/// Intervals are closed; a root hit exactly by a bisection point is returned as `[r, r]`.
pub fn isolate_real_roots(p: &UniPoly, digits: u32) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::Domain("cannot isolate roots of the zero polynomial".into()));
    }
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let eps = Rational::new(1.into(), pow10(digits));
    let bound = sf.cauchy_bound();
    let mut out = Vec::new();
    let lo = -bound.clone();
    let total = chain.count_all();
    bisect(&sf, &chain, &eps, lo, bound, total, &mut out);
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Refines the open interval `(lo, hi)` known to hold `count` distinct roots of `sf`.
fn bisect(
    sf: &UniPoly,
    chain: &SturmChain,
    eps: &Rational,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<Interval>,
) {
    if count == 0 {
        return;
    }
    if count == 1 && &hi - &lo <= *eps {
        out.push(Interval::closed(lo, hi));
        return;
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    let mid_root = sf.eval(&mid).is_zero();
    let left = chain.count_half_open(&lo, &mid) - usize::from(mid_root);
    let right = count - left - usize::from(mid_root);
    bisect(sf, chain, eps, lo, mid.clone(), left, out);
    if mid_root {
        out.push(Interval::closed(mid.clone(), mid.clone()));
    }
    bisect(sf, chain, eps, mid, hi, right, out);
}

/// Certified sign classification of `p` over `interval`.
///
/// The polynomial changes sign inside the interval exactly when a factor of odd
/// multiplicity has an interior root; otherwise one interior sample fixes the sign
/// and the presence of zeros decides strictness.
pub fn sign_on_interval(p: &UniPoly, interval: &Interval) -> SignClass {
    if p.is_zero() {
        return SignClass::Zero;
    }
    if interval.lo == interval.hi {
        let v = p.eval(&interval.lo);
        return match sign_of(&v) {
            1 => SignClass::StrictlyPositive,
            -1 => SignClass::StrictlyNegative,
            _ => SignClass::Zero,
        };
    }
    let odd = p.odd_part();
    let interior = Interval::open(interval.lo.clone(), interval.hi.clone());
    if odd.degree().unwrap_or(0) > 0 && count_roots_in(&odd, &interior).unwrap_or(0) > 0 {
        return SignClass::Mixed;
    }
    let sign = sign_of(&p.eval(&interior_sample(p, &interior)));
    let has_zero = count_roots_in(p, interval).unwrap_or(0) > 0;
    match (sign, has_zero) {
        (1, false) => SignClass::StrictlyPositive,
        (1, true) => SignClass::Nonnegative,
        (_, false) => SignClass::StrictlyNegative,
        (_, true) => SignClass::Nonpositive,
    }
}

/// An interior point of `interval` that is not a root of `p` (p nonzero).
fn interior_sample(p: &UniPoly, interval: &Interval) -> Rational {
    let width = interval.width();
    let mut k = 2i64;
    loop {
        for j in 1..k {
            let x = &interval.lo + &width * Rational::new(j.into(), k.into());
            if !p.eval(&x).is_zero() {
                return x;
            }
        }
        k += 1;
    }
}

/// Truncated decimal text of the interval's lower end, for display.
pub fn describe_root(iv: &Interval, digits: u32) -> String {
    if iv.lo == iv.hi {
        format_rational(&iv.lo)
    } else {
        format_decimal(&iv.lo, digits)
    }
}

/// Largest distance from `x` to either endpoint of `iv`.
pub fn distance_to_interval(x: &Rational, iv: &Interval) -> Rational {
    let a = (x - &iv.lo).abs();
    let b = (x - &iv.hi).abs();
    if a > b {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, parse_rational, rat};

    fn near(iv: &Interval, printed: &str) -> bool {
        let p = parse_rational(printed).unwrap();
        distance_to_interval(&p, iv) <= rat(1, 1_000_000_000)
    }

    #[test]
    fn appendix_cubic_roots() {
        let p = UniPoly::from_ints(&[-3, 78, 12, -24]);
        let roots = isolate_real_roots(&p, 10).unwrap();
        assert_eq!(roots.len(), 3);
        for (iv, s) in roots.iter().zip(["-1.591478567", "0.03825363319", "2.053224934"]) {
            assert!(near(iv, s), "{s}");
            assert!(iv.width() <= rat(1, 10_000_000_000));
        }
        let q = UniPoly::from_ints(&[-3, 56, -152, 32]);
        let roots = isolate_real_roots(&q, 10).unwrap();
        for (iv, s) in roots.iter().zip(["0.06482035236", "0.3322609755", "4.352918672"]) {
            assert!(near(iv, s), "{s}");
        }
    }

    #[test]
    fn exact_roots_are_points() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        let roots = isolate_real_roots(&p, 2).unwrap();
        assert_eq!(roots, vec![Interval::closed(int(-1), int(-1)), Interval::closed(int(1), int(1))]);
        assert!(isolate_real_roots(&UniPoly::zero(), 2).is_err());
        assert!(isolate_real_roots(&UniPoly::from_ints(&[1, 0, 1]), 4).unwrap().is_empty());
    }

    #[test]
    fn sign_classes() {
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(sign_on_interval(&sq, &Interval::closed(int(-1), int(1))), SignClass::Nonnegative);
        assert_eq!(sign_on_interval(&sq, &Interval::closed(int(1), int(2))), SignClass::StrictlyPositive);
        let lin = UniPoly::from_ints(&[0, 1]);
        assert_eq!(sign_on_interval(&lin, &Interval::closed(int(-1), int(1))), SignClass::Mixed);
        assert_eq!(sign_on_interval(&lin, &Interval::open(int(0), int(1))), SignClass::StrictlyPositive);
        assert_eq!(sign_on_interval(&lin, &Interval::closed(int(-1), int(0))), SignClass::Nonpositive);
    }

    #[test]
    fn interval_counts() {
        let p = UniPoly::from_ints(&[0, -1, 0, 1]); // roots -1, 0, 1
        assert_eq!(count_roots_in(&p, &Interval::closed(int(-1), int(1))).unwrap(), 3);
        assert_eq!(count_roots_in(&p, &Interval::open(int(-1), int(1))).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &Interval::closed_open(int(0), int(1))).unwrap(), 1);
        assert_eq!(count_real_roots(&p).unwrap(), 3);
    }
}
