//! Sparse multivariate polynomials over the rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::exact::{format_rational, int, Rational};

type Exponents = Vec<u32>;

/// Polynomial in named variables.
///
/// Canonical form: variable names sorted and each one used by at least one term,
/// no zero coefficients. Structural equality is therefore polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        Self { vars: vec![name.to_string()], terms }
    }

    /// Builds from raw parts and restores canonical form.
    fn from_parts(vars: Vec<String>, mut terms: BTreeMap<Exponents, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let mut used = vec![false; vars.len()];
        for e in terms.keys() {
            for (u, &k) in used.iter_mut().zip(e) {
                *u |= k > 0;
            }
        }
        if used.iter().all(|&u| u) {
            let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            return Self { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let new_vars = keep.iter().map(|&i| vars[i].clone()).collect();
        let mut new_terms = BTreeMap::new();
        for (e, c) in terms {
            if !c.is_zero() {
                new_terms.insert(keep.iter().map(|&i| e[i]).collect(), c);
            }
        }
        Self { vars: new_vars, terms: new_terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// `(exponent vector, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.vars.is_empty() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Domain(format!("unknown variable {name:?}")))
    }

    /// Re-expresses exponents over a superset of the variable list.
    fn lift(&self, vars: &[String]) -> BTreeMap<Exponents, Rational> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    out[map[i]] = k;
                }
                (out, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let set: BTreeSet<&String> = self.vars.iter().chain(other.vars.iter()).collect();
        set.into_iter().cloned().collect()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::int(1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Total degree; zero for constants and the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Degree in one variable; zero if the variable does not occur.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v == name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, name: &str, k: u32) -> Self {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return if k == 0 { self.clone() } else { Self::zero() };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] = 0;
                (e, c.clone())
            })
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Partial derivative with respect to a variable that occurs in the polynomial.
    pub fn partial(&self, name: &str) -> Result<Self> {
        let i = self.index_of(name)?;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            terms.insert(e2, c * int(e[i] as i64));
        }
        Ok(Self::from_parts(self.vars.clone(), terms))
    }

    /// Repeated partial derivative, e.g. `partial_n("t", 2)`.
    pub fn partial_n(&self, name: &str, order: u32) -> Result<Self> {
        let mut out = self.clone();
        for _ in 0..order {
            if out.vars.iter().all(|v| v != name) {
                self.index_of(name)?;
                return Ok(Self::zero());
            }
            out = out.partial(name)?;
        }
        Ok(out)
    }

    /// Replaces one variable by a polynomial.
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self> {
        self.substitute_all(&[(name, value.clone())])
    }

    /// Simultaneous substitution: every replacement reads the original variables.
    ///
    /// Names that do not occur in the polynomial are ignored.
    pub fn substitute_all(&self, subs: &[(&str, Self)]) -> Result<Self> {
        let mut targets: Vec<Option<&Self>> = vec![None; self.vars.len()];
        for (name, value) in subs {
            if let Some(i) = self.vars.iter().position(|v| v == name) {
                targets[i] = Some(value);
            }
        }
        let images: Vec<Self> = self
            .vars
            .iter()
            .zip(&targets)
            .map(|(v, t)| t.cloned().unwrap_or_else(|| Self::var(v)))
            .collect();
        let mut cache: BTreeMap<(usize, u32), Self> = BTreeMap::new();
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache.entry((i, k)).or_insert_with(|| images[i].pow(k)).clone();
                term = term.mul(&p);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Fixes one variable to a rational value; a no-op if the variable is absent.
    pub fn restrict(&self, name: &str, value: &Rational) -> Result<Self> {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return Ok(self.clone());
        };
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[i], 0);
            let v = c * num_traits::pow(value.clone(), k as usize);
            *terms.entry(e2).or_insert_with(Rational::zero) += v;
        }
        Ok(Self::from_parts(self.vars.clone(), terms))
    }

    /// Value at a full assignment; extra names are ignored, missing ones are an error.
    pub fn eval(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let (_, x) = assignment
                .iter()
                .find(|(n, _)| n == v)
                .ok_or_else(|| Error::Domain(format!("no value for variable {v:?}")))?;
            values.push(x.clone());
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Floating value at a full assignment.
    pub fn eval_f64(&self, assignment: &[(&str, f64)]) -> Result<f64> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let (_, x) = assignment
                .iter()
                .find(|(n, _)| n == v)
                .ok_or_else(|| Error::Domain(format!("no value for variable {v:?}")))?;
            values.push(*x);
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: f64 = values.iter().zip(e).map(|(x, &k)| x.powi(k as i32)).product();
                crate::exact::to_f64(c) * mono
            })
            .sum())
    }

    /// Reduces powers of a formal symbol `name` using `name^2 = radicand`.
    ///
    /// The result is affine in `name`. This lets identities involving a square root
    /// be checked without approximating it.
    pub fn reduce_radical(&self, name: &str, radicand: &Self) -> Self {
        let deg = self.degree_in(name);
        let root = Self::var(name);
        let mut acc = Self::zero();
        let mut even = Self::one();
        for k in 0..=deg {
            if k > 0 && k % 2 == 0 {
                even = even.mul(radicand);
            }
            let c = self.coefficient_of(name, k);
            if c.is_zero() {
                continue;
            }
            let part = c.mul(&even);
            acc = acc.add(&if k % 2 == 1 { part.mul(&root) } else { part });
        }
        acc
    }

    /// True iff every coefficient is nonnegative.
    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Univariate view; errors if any other variable remains.
    pub fn to_uni(&self, name: &str) -> Result<UniPoly> {
        if let Some(other) = self.vars.iter().find(|v| *v != name) {
            return Err(Error::Domain(format!(
                "polynomial still depends on {other:?}, not only on {name:?}"
            )));
        }
        let deg = self.degree_in(name) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.first().copied().unwrap_or(0) as usize;
            coeffs[k] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial under the given variable name.
    pub fn from_uni(p: &UniPoly, name: &str) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32], c.clone()))
            .collect();
        Self::from_parts(vec![name.to_string()], terms)
    }
}

crate::ring::ring_via_inherent!(MultiPoly);

impl MultiPoly {
    pub fn one() -> Self {
        MultiPoly::int(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.vars == other.vars {
            let mut terms = self.terms.clone();
            for (e, c) in &other.terms {
                *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
            }
            return Self::from_parts(self.vars.clone(), terms);
        }
        let vars = self.union_vars(other);
        let mut terms = self.lift(&vars);
        for (e, c) in other.lift(&vars) {
            *terms.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::from_parts(vars, terms)
    }
    pub fn sub(&self, other: &Self) -> Self {
        MultiPoly::add(self, &MultiPoly::neg(other))
    }
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.union_vars(other);
        let a = self.lift(&vars);
        let b = other.lift(&vars);
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::from_parts(vars, terms)
    }
    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, rhs)
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl fmt::Display for MultiPoly {
    /// Sparse term list `c * x^a y^b`, highest total degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        order.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (n, (e, c)) in order.into_iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&format_rational(&c.abs()))?;
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if !mono.is_empty() {
                write!(f, " * {}", mono.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::parse_poly;

    #[test]
    fn canonical_after_cancellation() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let p = &(&x + &y) - &y;
        assert_eq!(p, x);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn binomial_square() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let lhs = (&x + &y).pow(2);
        let rhs = parse_poly("x^2 + 2*x*y + y^2").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn calculus_and_substitution() {
        let p = parse_poly("x^2 y + 3 y").unwrap();
        assert_eq!(p.partial("x").unwrap(), parse_poly("2 x y").unwrap());
        assert!(p.partial("z").is_err());
        assert_eq!(p.restrict("z", &rat(1, 2)).unwrap(), p);
        let q = p.substitute("y", &parse_poly("x + 1").unwrap()).unwrap();
        assert_eq!(q, parse_poly("x^3 + x^2 + 3x + 3").unwrap());
        // simultaneous: x -> y, y -> x swaps rather than collapsing
        let s = parse_poly("x - 2 y").unwrap();
        let swapped = s
            .substitute_all(&[("x", MultiPoly::var("y")), ("y", MultiPoly::var("x"))])
            .unwrap();
        assert_eq!(swapped, parse_poly("y - 2 x").unwrap());
        assert_eq!(p.restrict("y", &int(2)).unwrap(), parse_poly("2 x^2 + 6").unwrap());
        assert_eq!(p.eval(&[("x", int(1)), ("y", int(2))]).unwrap(), int(8));
    }

    #[test]
    fn display_round_trip() {
        let p = parse_poly("-1/2 x^2 y + 3 y - 7").unwrap();
        let text = p.to_string();
        assert_eq!(text, "-1/2 * x^2 y + 3 * y - 7");
        assert_eq!(parse_poly(&text).unwrap(), p);
    }
}
