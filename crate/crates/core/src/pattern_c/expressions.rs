//! Named polynomials for the pattern: the 4x4 lemma expansions, the `Q`/`R`
//! products, the contradiction functions on the simplex, and the `h10` constants.
//!
//! Variables: `b11..b55` and the off-diagonal names for the matrix; `x1..x4`,
//! `y1..y3` for the generic 4x4 block; `x, y, z, u, v` for the diagonal simplex.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::poly::MultiPoly;
use crate::replay::poly_in;

const DEFINITIONS: &[(&str, &str)] = &[
    ("P123_one", "-(1-x3) y1^2 - (1-x2)(y2^2 - (1-x1)(1-x3))"),
    (
        "PM_one",
        "-((1-x1)(1-x3) - y2^2) y3^2 + (1-x4)((1-x2)((1-x1)(1-x3) - y2^2) - (1-x3) y1^2)",
    ),
    (
        "PM_half",
        "1/4 (4y2^2 - (1-2x1)(1-2x3)) y3^2 \
         - 1/16 (1-2x4)((1-2x2)(4y2^2 - (1-2x1)(1-2x3)) + 4(1-2x3) y1^2)",
    ),
    ("Q12", "(1-b11)(1-b22)"),
    ("Q15", "(1-b11)(1-b55)"),
    ("Q24", "(1-b22)(1-b44)"),
    ("Q34", "(1-b33)(1-b44)"),
    ("Q45", "(1-b44)(1-b55)"),
    ("R12", "(1-2b11)(1-2b22)"),
    ("R15", "(1-2b11)(1-2b55)"),
    ("R24", "(1-2b22)(1-2b44)"),
    ("R34", "(1-2b33)(1-2b44)"),
    ("R45", "(1-2b44)(1-2b55)"),
    ("f4_numerator", "Q45 - 1/4 R45"),
    ("h7_numerator", "625(3 - 2x - 2y)(3 - 2u - 2v)"),
    ("h7_denominator", "4(5625 - 7650x - 7650v + 11084 x v)"),
    ("h8", "1/4 ((1-2y)(1-2u) + (1-2z)(1-2v))"),
    (
        "h9",
        "625(3 - 2x - 2y)(3 - 2u - 2v) \
         - ((1-2y)(1-2u) + (1-2z)(1-2v))(5625 - 7650x - 7650v + 11084 x v)",
    ),
    ("C7_sq", "3 - 2b44 - 2b55"),
    ("C8", "3 - 2b22"),
    ("C9_sq", "16(1 - b55)"),
    ("C10_sq", "4(1 - 2b55)"),
];

/// Registry of the named polynomials.
#[derive(Debug, Clone)]
pub struct CExpressions {
    env: BTreeMap<String, MultiPoly>,
    order: Vec<&'static str>,
}

impl Default for CExpressions {
    fn default() -> Self {
        Self::new()
    }
}

impl CExpressions {
    pub fn new() -> Self {
        let mut env = BTreeMap::new();
        let mut order = Vec::new();
        for (name, text) in DEFINITIONS {
            let p = poly_in(text, &env);
            env.insert((*name).to_string(), p);
            order.push(*name);
        }
        Self { env, order }
    }

    /// The named polynomial.
    ///
    /// # Panics
    /// Panics on an unknown name; names are fixed at compile time.
    pub fn get(&self, name: &str) -> &MultiPoly {
        self.env.get(name).unwrap_or_else(|| panic!("unknown expression {name}"))
    }

    /// Parses text that may refer to registered names.
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        crate::poly::parse_poly_with(text, &self.env)
    }

    pub fn names(&self) -> &[&'static str] {
        &self.order
    }

    /// `h9` with `v` eliminated through the trace: `v = 1/2 - x - y - z - u`.
    pub fn h9_on_simplex(&self) -> Result<MultiPoly> {
        self.get("h9").substitute("v", &self.parse("1/2 - x - y - z - u")?)
    }

    /// `h9` evaluated at a point of the simplex given in units of `1/scale`.
    ///
    /// Integer arithmetic only: returns `scale^4 h9`.
    pub fn h9_scaled(point: [i128; 5], scale: i128) -> i128 {
        let [x, y, z, u, v] = point;
        let n = scale;
        let first = 625 * n * n * (3 * n - 2 * x - 2 * y) * (3 * n - 2 * u - 2 * v);
        let factor = (n - 2 * y) * (n - 2 * u) + (n - 2 * z) * (n - 2 * v);
        let den = 5625 * n * n - 7650 * n * x - 7650 * n * v + 11084 * x * v;
        first - factor * den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn scaled_h9_agrees_with_polynomial() {
        let e = CExpressions::new();
        let scale = 10_000i128;
        for point in [[1000, 200, 2800, 500, 500], [0, 0, 5000, 0, 0], [2400, 0, 2600, 0, 0]] {
            let exact = e
                .get("h9")
                .eval(&[
                    ("x", rat(point[0] as i64, 10_000)),
                    ("y", rat(point[1] as i64, 10_000)),
                    ("z", rat(point[2] as i64, 10_000)),
                    ("u", rat(point[3] as i64, 10_000)),
                    ("v", rat(point[4] as i64, 10_000)),
                ])
                .unwrap();
            let scaled = CExpressions::h9_scaled(point, scale);
            assert_eq!(exact * crate::exact::int(10_000i64.pow(4)), crate::exact::Rational::from_integer(scaled.into()));
        }
    }
}
