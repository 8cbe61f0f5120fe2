//! Exact polynomial arithmetic: dense univariate, sparse multivariate, and
//! Sturm-based root isolation.

mod multi;
mod parse;
mod sturm;
mod uni;

pub use multi::MultiPoly;
pub use parse::{parse_poly, parse_poly_with};
pub use sturm::{
    count_real_roots, count_roots_in, describe_root, distance_to_interval, isolate_real_roots,
    sign_on_interval, Interval, SignClass, SturmChain,
};
pub use uni::UniPoly;

/// Exact value of `p` at `x`.
pub fn uni_eval(p: &UniPoly, x: &crate::exact::Rational) -> crate::exact::Rational {
    p.eval(x)
}

/// True iff `lhs - rhs` is the zero polynomial.
pub fn identity_check(lhs: &MultiPoly, rhs: &MultiPoly) -> bool {
    lhs.sub(rhs).is_zero()
}
