//! Dense univariate polynomials with rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, parse_rational, Rational};

/// Polynomial stored as ascending coefficients; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Parses an ascending, comma separated coefficient list such as `"-3, 78, 12, -24"`.
    pub fn parse_coefficients(text: &str) -> Result<Self> {
        let coeffs = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Input("empty coefficient list".into()));
        }
        Ok(Self::new(coeffs))
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + crate::exact::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Yun's decomposition: factors `a_1, a_2, ...` with `self = c * prod a_i^i`.
    pub fn square_free_factors(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let mut a = self.gcd(&d);
        let mut b = self.div_rem(&a).0;
        let mut c = d.div_rem(&a).0;
        let mut dd = c.sub(&b.derivative());
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&dd);
            out.push(a.clone());
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = c.sub(&b.derivative());
        }
        out
    }

    /// Product of the square-free factors of odd multiplicity.
    pub fn odd_part(&self) -> Self {
        self.square_free_factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == 0)
            .fold(Self::constant(Rational::one()), |acc, (_, f)| acc.mul(f))
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(other).add(&Self::constant(c.clone())))
    }

    /// Bound `1 + max |a_i / a_n|` on the modulus of every root.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let top = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        top + Rational::one()
    }
}

crate::ring::ring_via_inherent!(UniPoly);

impl UniPoly {
    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for UniPoly {
    /// Descending-degree terms in `x`, e.g. `-24 * x^3 + 12 * x^2 + 78 * x - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = format_rational(&c.abs());
            match i {
                0 => f.write_str(&mag)?,
                1 => write!(f, "{mag} * x")?,
                _ => write!(f, "{mag} * x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn eval_examples() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(p.eval(&int(1)), int(0));
        let h = UniPoly::from_ints(&[-3, 56, -152, 32]);
        assert_eq!(h.eval(&int(0)), int(-3));
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let p = UniPoly::from_ints(&[2, -3, 0, 1]);
        let (q, r) = p.div_rem(&UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&[-2, 1, 1]));
        assert_eq!(p.gcd(&p.derivative()), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(p.square_free().monic(), UniPoly::from_ints(&[-2, 1, 1]));
    }

    #[test]
    fn yun_factors() {
        // x (x-1)^2 (x+1)^3
        let x = UniPoly::x();
        let a = x.sub(&UniPoly::from_ints(&[1]));
        let b = x.add(&UniPoly::from_ints(&[1]));
        let p = x.mul(&a).mul(&a).mul(&b).mul(&b).mul(&b).scale(&rat(3, 2));
        let f = p.square_free_factors();
        assert_eq!(f, vec![x.clone(), a.clone(), b.clone()]);
        assert_eq!(p.odd_part(), x.mul(&b));
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[-3, 78, 12, -24]).to_string(), "-24 * x^3 + 12 * x^2 + 78 * x - 3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
