//! Exact and numeric machinery for the symmetric nonnegative inverse eigenvalue
//! problem on 5-element spectra.
//!
//! - [`exact`]: rationals and certified decimal square-root bounds.
//! - [`poly`]: univariate and multivariate polynomials, Sturm root isolation.
//! - [`spectral`]: small symmetric matrices, exact characteristic polynomials, Jacobi.
//! - [`sniep`]: realizability decisions and certificate construction.
//! - [`pattern_h`], [`pattern_c`]: replays of the pattern-specific bound machinery.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exact;
pub mod inequality;
pub mod poly;
pub mod ring;
pub mod pattern_c;
pub mod pattern_h;
pub(crate) mod replay;
pub mod report;
pub mod sniep;
pub mod spectral;

pub use error::{Error, Result};
pub use exact::Rational;
pub use poly::{MultiPoly, UniPoly};
