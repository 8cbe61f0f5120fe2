//! Realizability of five-element real spectra by symmetric nonnegative matrices
//! in the region `trace >= lambda_1 / 2`.
//!
//! [`check_conditions`] decides the question exactly; [`realize`] builds a
//! certificate matrix by Fiedler gluing and validates it numerically.

mod realize;
mod sample;

pub use realize::{decide, glue, realize, Certificate, GlueStep, PerronBlock, CERTIFICATE_TOL, ENTRY_TOL};
pub use sample::{
    random_feasible_spectrum, sample_at, sample_c_params, sample_h_params, sample_random, sweep, sweep_pattern_c,
    sweep_pattern_h, sweep_random, SweepSummary, THIRD_EIGENVALUE_TOL,
};

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, parse_rational, to_f64, Rational};

/// Number of eigenvalues handled.
pub const SPECTRUM_LEN: usize = 5;

/// Five real numbers sorted descending, with their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumList {
    values: [Rational; SPECTRUM_LEN],
    trace: Rational,
    reordered: bool,
}

impl SpectrumList {
    /// Sorts the values descending; `reordered()` reports whether that changed anything.
    pub fn new(values: &[Rational]) -> Result<Self> {
        let arr: [Rational; SPECTRUM_LEN] = values
            .to_vec()
            .try_into()
            .map_err(|_| Error::Input(format!("expected {SPECTRUM_LEN} eigenvalues, got {}", values.len())))?;
        let mut sorted = arr.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        let reordered = sorted != arr;
        let trace = sorted.iter().fold(Rational::zero(), |acc, x| acc + x);
        Ok(Self { values: sorted, trace, reordered })
    }

    /// Parses five rationals or decimals separated by commas or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| parse_rational(s).map_err(|e| Error::Input(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&values)
    }

    pub fn values(&self) -> &[Rational; SPECTRUM_LEN] {
        &self.values
    }

    /// `lambda_k` with `k` counted from 1.
    pub fn lambda(&self, k: usize) -> &Rational {
        &self.values[k - 1]
    }

    pub fn trace(&self) -> &Rational {
        &self.trace
    }

    /// True when the input was not already sorted descending.
    pub fn reordered(&self) -> bool {
        self.reordered
    }

    pub fn to_f64(&self) -> [f64; SPECTRUM_LEN] {
        std::array::from_fn(|i| to_f64(&self.values[i]))
    }

    /// Every value multiplied by `c`, re-sorted.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        let v: Vec<Rational> = self.values.iter().map(|x| x * c).collect();
        Self::new(&v)
    }
}

impl fmt::Display for SpectrumList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Three-way outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Realizable,
    NotRealizable,
    OutOfRegion,
}

/// Necessary condition that failed, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailedCondition {
    /// `lambda_1 >= |lambda_i|` for all `i`.
    Perron,
    /// `lambda_2 + lambda_5 <= trace`.
    McdonaldNeumann,
    /// `lambda_3 <= trace`.
    Lambda3,
}

impl FailedCondition {
    pub fn name(self) -> &'static str {
        match self {
            Self::Perron => "perron",
            Self::McdonaldNeumann => "mcdonald_neumann",
            Self::Lambda3 => "lambda3",
        }
    }
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decision for one spectrum. `Realizable` from [`check_conditions`] carries no
/// certificate yet; [`decide`] attaches one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_condition: Option<FailedCondition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl Verdict {
    fn of(kind: VerdictKind, failed_condition: Option<FailedCondition>) -> Self {
        Self { kind, failed_condition, certificate: None }
    }

    /// CLI exit code: 0 realizable, 1 not realizable, 2 out of region.
    pub fn exit_code(&self) -> i32 {
        match self.kind {
            VerdictKind::Realizable => 0,
            VerdictKind::NotRealizable => 1,
            VerdictKind::OutOfRegion => 2,
        }
    }
}

/// `trace >= lambda_1 / 2`, compared exactly.
pub fn in_region(s: &SpectrumList) -> bool {
    int(2) * s.trace() >= *s.lambda(1)
}

/// Exact decision without a certificate.
///
/// Out of region when `trace < lambda_1 / 2`; otherwise the first failing of the
/// Perron, McDonald-Neumann and `lambda_3` conditions, else realizable.
pub fn check_conditions(s: &SpectrumList) -> Verdict {
    if !in_region(s) {
        return Verdict::of(VerdictKind::OutOfRegion, None);
    }
    let t = s.trace();
    let failed = if s.lambda(1) < &s.lambda(5).abs() {
        Some(FailedCondition::Perron)
    } else if s.lambda(2) + s.lambda(5) > *t {
        Some(FailedCondition::McdonaldNeumann)
    } else if s.lambda(3) > t {
        Some(FailedCondition::Lambda3)
    } else {
        None
    };
    match failed {
        Some(c) => Verdict::of(VerdictKind::NotRealizable, Some(c)),
        None => Verdict::of(VerdictKind::Realizable, None),
    }
}

/// Rescales to trace `1/2`: returns `(s / scale, scale)` with `scale = 2 trace`.
///
/// The normalized `lambda_1` is at most 1 exactly when `s` is in the region.
pub fn normalize(s: &SpectrumList) -> Result<(SpectrumList, Rational)> {
    if !s.trace().is_positive() {
        return Err(Error::Domain(format!("normalization needs a positive trace, got {}", format_rational(s.trace()))));
    }
    let scale = int(2) * s.trace();
    let out = s.scaled(&(int(1) / &scale))?;
    Ok((out, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn list(text: &str) -> SpectrumList {
        SpectrumList::parse(text).unwrap()
    }

    #[test]
    fn examples() {
        let v = check_conditions(&list("1, 7/10, 7/10, -9/10, -9/10"));
        assert_eq!((v.kind, v.failed_condition), (VerdictKind::NotRealizable, Some(FailedCondition::Lambda3)));
        assert_eq!(check_conditions(&list("1, 0.35, 0.34, -0.72, -0.72")).kind, VerdictKind::OutOfRegion);
        assert_eq!(check_conditions(&list("4 3 -2 -2 -2")).kind, VerdictKind::OutOfRegion);
        assert_eq!(check_conditions(&list("1,1,1,-1,-1")).kind, VerdictKind::Realizable);
    }

    #[test]
    fn failure_order() {
        // Perron fails first even though lambda_3 also exceeds the trace.
        let v = check_conditions(&list("1, 1, 1, 0, -11/10"));
        assert_eq!(v.failed_condition, Some(FailedCondition::Perron));
        // Inside the region the McDonald-Neumann condition follows from the others.
        let v = check_conditions(&list("1, 1, -3/5, -3/5, -3/5"));
        assert_eq!(v.kind, VerdictKind::OutOfRegion);
    }

    #[test]
    fn boundary_trace_is_in_region() {
        assert!(in_region(&list("1, 0, 0, 0, -1/2")));
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let s = list("-1, 1, 0, 0, 0");
        assert!(s.reordered());
        assert_eq!(s.lambda(1), &int(1));
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(SpectrumList::parse("1, 2"), Err(Error::Input(_))));
    }

    #[test]
    fn normalize_examples() {
        let (s, scale) = normalize(&list("1,0,0,0,0")).unwrap();
        assert_eq!(scale, int(2));
        assert_eq!(s.lambda(1), &rat(1, 2));
        let (s, scale) = normalize(&list("4,3,-2,-2,-2")).unwrap();
        assert_eq!(scale, int(2));
        assert_eq!(s.values(), &[int(2), rat(3, 2), int(-1), int(-1), int(-1)]);
        assert!(normalize(&list("0,0,0,0,-1")).is_err());
    }
}
