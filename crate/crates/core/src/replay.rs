//! Helpers that turn one algebraic claim into one report step.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::{format_rational, Rational};
use crate::poly::{
    distance_to_interval, isolate_real_roots, parse_poly, parse_poly_with, sign_on_interval, Interval,
    MultiPoly, SignClass, UniPoly,
};
use crate::report::Report;

/// Digits used when isolating roots to compare against printed decimals.
pub const ROOT_DIGITS: u32 = 10;

/// Largest accepted gap between a printed root and its isolating interval.
pub fn root_tolerance() -> Rational {
    Rational::new(1.into(), crate::exact::pow10(9))
}

/// Records `lhs == rhs` as polynomials; evaluation errors become failures.
pub fn check_identity(
    report: &mut Report,
    step: &str,
    claim: &str,
    lhs: Result<MultiPoly>,
    rhs: Result<MultiPoly>,
) -> bool {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let diff = l.sub(&r);
            report.check_with(step, claim, diff.is_zero(), || format!("difference {diff}"))
        }
        (Err(e), _) | (_, Err(e)) => {
            report.fail(step, claim, e.to_string());
            false
        }
    }
}

/// Records whether the sign class of `p` on `iv` satisfies `accept`.
pub fn check_sign(
    report: &mut Report,
    step: &str,
    claim: &str,
    p: Result<UniPoly>,
    iv: &Interval,
    accept: fn(SignClass) -> bool,
) -> bool {
    match p {
        Ok(p) => {
            let class = sign_on_interval(&p, iv);
            report.check_with(step, claim, accept(class), || format!("sign class {class:?} for {p}"))
        }
        Err(e) => {
            report.fail(step, claim, e.to_string());
            false
        }
    }
}

/// Isolates the real roots of `p` and matches them in order against printed decimals.
///
/// Returns the isolating intervals so later steps can refer to named roots.
pub fn check_roots(
    report: &mut Report,
    step: &str,
    claim: &str,
    p: Result<UniPoly>,
    printed: &[&str],
) -> Option<Vec<Interval>> {
    let p = match p {
        Ok(p) => p,
        Err(e) => {
            report.fail(step, claim, e.to_string());
            return None;
        }
    };
    let roots = match isolate_real_roots(&p, ROOT_DIGITS) {
        Ok(r) => r,
        Err(e) => {
            report.fail(step, claim, e.to_string());
            return None;
        }
    };
    if roots.len() != printed.len() {
        report.fail(
            step,
            claim,
            format!("isolated {} real roots, {} printed", roots.len(), printed.len()),
        );
        return None;
    }
    let tol = root_tolerance();
    let mut bad = Vec::new();
    for (text, iv) in printed.iter().zip(&roots) {
        match crate::exact::parse_rational(text) {
            Ok(x) if distance_to_interval(&x, iv) <= tol => {}
            Ok(_) => bad.push(format!(
                "{text} vs [{}, {}]",
                crate::exact::format_decimal(&iv.lo, 12),
                crate::exact::format_decimal(&iv.hi, 12)
            )),
            Err(e) => bad.push(format!("{text}: {e}")),
        }
    }
    let ok = bad.is_empty();
    report.check_with(step, claim, ok, || bad.join("; "));
    ok.then_some(roots)
}

/// Records that an exact value equals the expected one.
pub fn check_value(report: &mut Report, step: &str, claim: &str, got: Result<Rational>, want: &Rational) -> bool {
    match got {
        Ok(v) => report.check_with(step, claim, &v == want, || format!("got {}", format_rational(&v))),
        Err(e) => {
            report.fail(step, claim, e.to_string());
            false
        }
    }
}

/// Parses `text`, panicking on malformed built-in expression text.
pub fn poly(text: &str) -> MultiPoly {
    parse_poly(text).unwrap_or_else(|e| panic!("built-in expression {text:?}: {e}"))
}

/// Parses `text` against a registry of named expressions.
pub fn poly_in(text: &str, env: &BTreeMap<String, MultiPoly>) -> MultiPoly {
    parse_poly_with(text, env).unwrap_or_else(|e| panic!("built-in expression {text:?}: {e}"))
}

/// `p` with `name` replaced by the polynomial written in `text`.
pub fn at(p: &MultiPoly, name: &str, text: &str) -> Result<MultiPoly> {
    p.substitute(name, &poly(text))
}

/// Univariate restriction of a polynomial that depends on `name` only.
pub fn uni(p: Result<MultiPoly>, name: &str) -> Result<UniPoly> {
    p?.to_uni(name)
}
