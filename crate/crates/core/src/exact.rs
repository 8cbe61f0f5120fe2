//! Exact rationals and certified decimal bounds on square roots.
//!
//! - `Rational` is an arbitrary-precision fraction, always in lowest terms.
//! - `sqrt_lower_bound` / `sqrt_upper_bound` bracket `sqrt(x)` on the grid `10^-n`.
//! - `verify_sqrt_bound` re-checks a claimed bound with integer arithmetic only.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact fraction backed by big integers.
pub type Rational = BigRational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

/// Parses `"p/q"`, an integer, or a decimal literal such as `"-0.35"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Format("empty rational".into()));
    }
    let bad = || Error::Format(format!("not a rational: {text:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Format(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let mantissa: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let value = Rational::new(mantissa, pow10(frac.len() as u32));
    Ok(if neg { -value } else { value })
}

/// `p/q` text, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion truncated toward zero after `digits` places.
pub fn format_decimal(r: &Rational, digits: u32) -> String {
    let scale = pow10(digits);
    let scaled = (r.numer() * &scale).abs() / r.denom();
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{scaled}");
    }
    let (q, rem) = scaled.div_rem(&scale);
    format!("{sign}{q}.{:0>width$}", rem.to_string(), width = digits as usize)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational equal to the given finite float.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("{x} is not finite")))
}

/// Which side of the root a decimal bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// A bound `mantissa / 10^digits` on the square root of some rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalBound {
    pub mantissa: BigUint,
    pub digits: u32,
    pub side: Side,
}

impl DecimalBound {
    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.mantissa.clone()), pow10(self.digits))
    }
}

impl fmt::Display for DecimalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_decimal(&self.value(), self.digits))
    }
}

fn check_nonnegative(x: &Rational) -> Result<()> {
    if x.is_negative() {
        Err(Error::Domain(format!("square root of negative value {}", format_rational(x))))
    } else {
        Ok(())
    }
}

/// Floor of `sqrt(x) * 10^n` together with whether the root is exact on the grid.
fn scaled_isqrt(x: &Rational, n: u32) -> (BigInt, bool) {
    let target = x.numer() * pow10(2 * n);
    let floor = &target / x.denom();
    let r = floor.sqrt();
    let exact = &r * &r * x.denom() == target;
    (r, exact)
}

/// Certified lower bound of `sqrt(x)` on the grid `10^-digits`.
pub fn decimal_bound(x: &Rational, digits: u32, side: Side) -> Result<DecimalBound> {
    check_nonnegative(x)?;
    let (r, exact) = scaled_isqrt(x, digits);
    let r = match side {
        Side::Lower => r,
        Side::Upper if exact => r,
        Side::Upper => r + 1,
    };
    Ok(DecimalBound { mantissa: r.to_biguint().expect("nonnegative root"), digits, side })
}

/// Largest `r/10^n` with `(r/10^n)^2 <= x`.
pub fn sqrt_lower_bound(x: &Rational, n: u32) -> Result<Rational> {
    decimal_bound(x, n, Side::Lower).map(|b| b.value())
}

/// Smallest `r/10^n` with `(r/10^n)^2 >= x`.
pub fn sqrt_upper_bound(x: &Rational, n: u32) -> Result<Rational> {
    decimal_bound(x, n, Side::Upper).map(|b| b.value())
}

/// Smallest `n` such that the denominator of `c` divides `10^n`.
pub fn decimal_digits(c: &Rational) -> Result<u32> {
    let mut d = c.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return Err(Error::Format(format!(
            "denominator of {} is not a power of ten",
            format_rational(c)
        )));
    }
    Ok(twos.max(fives))
}

/// Checks `candidate` against the bound invariant for `sqrt(x)` on the grid of
/// `digits` decimal places, using only integer comparisons.
pub fn verify_sqrt_bound_digits(x: &Rational, candidate: &Rational, digits: u32, side: Side) -> Result<bool> {
    if decimal_digits(candidate)? > digits {
        return Err(Error::Format(format!(
            "{} needs more than {digits} decimal places",
            format_rational(candidate)
        )));
    }
    if x.is_negative() || candidate.is_negative() {
        return Ok(false);
    }
    let scale = pow10(digits);
    let r = candidate.numer() * (&scale / candidate.denom());
    let p = x.numer();
    let q = x.denom();
    let p_scaled = p * pow10(2 * digits);
    let ok = match side {
        // 10^2n p - q r^2 >= 0 and q (r+1)^2 - 10^2n p > 0
        Side::Lower => {
            let r1 = &r + 1;
            &p_scaled - q * &r * &r >= BigInt::zero() && q * &r1 * &r1 - &p_scaled > BigInt::zero()
        }
        Side::Upper => {
            let below: BigInt = &r - 1;
            let lower_ok = below.is_negative() || q * &below * &below - &p_scaled < BigInt::zero();
            q * &r * &r - &p_scaled >= BigInt::zero() && lower_ok
        }
    };
    Ok(ok)
}

/// As [`verify_sqrt_bound_digits`] with the fewest decimal places that represent `candidate`.
pub fn verify_sqrt_bound(x: &Rational, candidate: &Rational, side: Side) -> Result<bool> {
    let digits = decimal_digits(candidate)?;
    verify_sqrt_bound_digits(x, candidate, digits, side)
}

/// A value written `k√m/d`, kept as the exact square `k²m/d²`.
///
/// Accepts `"√679/50"`, `"3√1252230/6230"`, `"13/22"`, `"0"`; the
/// ASCII spelling `"sqrt"` may stand in for `√`.
pub fn parse_surd_square(text: &str) -> Result<Rational> {
    let s = text.trim().replace("sqrt", "√");
    let Some((k, rest)) = s.split_once('√') else {
        let v = parse_rational(&s)?;
        return Ok(&v * &v);
    };
    let k: Rational = if k.trim().is_empty() { int(1) } else { parse_rational(k)? };
    let (m, d) = match rest.split_once('/') {
        Some((m, d)) => (parse_rational(m)?, parse_rational(d)?),
        None => (parse_rational(rest)?, int(1)),
    };
    if d.is_zero() {
        return Err(Error::Format(format!("zero denominator in {text:?}")));
    }
    Ok(&k * &k * m / (&d * &d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bounds_from_worked_example() {
        assert_eq!(sqrt_lower_bound(&rat(679, 2500), 2).unwrap(), rat(13, 25));
        assert_eq!(sqrt_lower_bound(&int(4), 2).unwrap(), int(2));
    }

    #[test]
    fn lower_bound_of_two_at_ten_digits() {
        // isqrt(2 * 10^20) by bisection, independent of the Newton routine
        let target = BigInt::from(2) * pow10(20);
        let (mut lo, mut hi) = (BigInt::zero(), target.clone());
        while &hi - &lo > BigInt::one() {
            let mid = (&lo + &hi) / 2;
            if &mid * &mid <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert_eq!(lo, BigInt::from(14142135623u64));
        let expected = Rational::new(lo, pow10(10));
        assert_eq!(sqrt_lower_bound(&int(2), 10).unwrap(), expected);
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(sqrt_upper_bound(&int(4), 2).unwrap(), int(2));
        assert_eq!(sqrt_upper_bound(&int(2), 2).unwrap(), rat(142, 100));
        assert_eq!(sqrt_upper_bound(&rat(63936, 15625), 2).unwrap(), rat(203, 100));
    }

    #[test]
    fn negative_input_is_domain_error() {
        assert!(matches!(sqrt_lower_bound(&rat(-1, 2), 2), Err(Error::Domain(_))));
        assert!(matches!(sqrt_upper_bound(&rat(-1, 2), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_sqrt_bound(&rat(679, 2500), &rat(52, 100), Side::Lower).unwrap());
        assert!(verify_sqrt_bound(&int(4), &rat(20, 10), Side::Lower).unwrap());
        assert!(!verify_sqrt_bound(&int(2), &rat(15, 10), Side::Lower).unwrap());
        assert!(verify_sqrt_bound(&int(2), &rat(142, 100), Side::Upper).unwrap());
        assert!(!verify_sqrt_bound(&int(2), &rat(143, 100), Side::Upper).unwrap());
        assert!(matches!(verify_sqrt_bound(&int(2), &rat(1, 3), Side::Lower), Err(Error::Format(_))));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("0.35").unwrap(), rat(7, 20));
        assert_eq!(parse_rational("-0.72").unwrap(), rat(-18, 25));
        assert_eq!(parse_rational(" 3/6 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("-").is_err());
        assert_eq!(format_rational(&rat(-7419049, 156250000)), "-7419049/156250000");
        assert_eq!(format_decimal(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(format_decimal(&rat(5, 2), 0), "2");
    }

    #[test]
    fn surd_squares() {
        assert_eq!(parse_surd_square("√679/50").unwrap(), rat(679, 2500));
        assert_eq!(parse_surd_square("3√1252230/6230").unwrap(), rat(9 * 1252230, 6230 * 6230));
        assert_eq!(parse_surd_square("13/22").unwrap(), rat(169, 484));
        assert_eq!(parse_surd_square("0").unwrap(), int(0));
        assert_eq!(parse_surd_square("68sqrt14867/14867").unwrap(), rat(68 * 68, 14867));
    }
}
