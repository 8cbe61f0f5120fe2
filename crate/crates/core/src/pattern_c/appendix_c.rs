//! Replay of the contradiction when one of `b33`, `b55` is at least `26/100`.
//!
//! On `F = {x >= 0, z >= 26/100, x + y + z + u + v = 1/2}` the better lower and
//! upper bounds on `b24` force `h9 > 0`; the steps below show `h9 <= 0` on `F`
//! by convexity reductions to three edge families, then carry the argument to
//! `b12` with the formal symbol swap.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CExpressions;
use crate::error::Result;
use crate::exact::{rat, Rational};
use crate::poly::{Interval, MultiPoly, SignClass};
use crate::replay::{at, check_identity, check_roots, check_sign, check_value, poly, uni};
use crate::report::Report;

/// Points drawn by the randomized check of `h9 <= 0`.
pub const H9_GRID_POINTS: usize = 100_000;

/// Denominator of the integer grid the random points live on.
pub const H9_GRID_SCALE: i64 = 10_000;

const DEFAULT_SEED: u64 = 26;

fn nonpositive(c: SignClass) -> bool {
    c.is_nonpositive()
}

fn nonnegative(c: SignClass) -> bool {
    c.is_nonnegative()
}

fn z_range() -> Interval {
    Interval::closed(rat(26, 100), rat(1, 2))
}

fn second(p: &Result<MultiPoly>, name: &str) -> Result<MultiPoly> {
    p.as_ref().map_err(Clone::clone).and_then(|p| p.partial_n(name, 2))
}

/// `h9` restricted by substituting each listed variable.
fn h9_on(e: &CExpressions, subs: &[(&str, &str)]) -> Result<MultiPoly> {
    let list: Vec<(&str, MultiPoly)> = subs.iter().map(|(n, t)| (*n, poly(t))).collect();
    e.get("h9").substitute_all(&list)
}

/// Full replay with the default sample size and seed.
pub fn verify_appendix_c() -> Report {
    verify_appendix_c_with(H9_GRID_POINTS, DEFAULT_SEED)
}

/// Full replay; `points` random grid points of `F` are checked with seed `seed`.
pub fn verify_appendix_c_with(points: usize, seed: u64) -> Report {
    let e = CExpressions::new();
    let mut r = Report::new("b33 or b55 at least 26/100");
    let ok = |text: &str| e.parse(text);
    let (quarter, half) = (rat(1, 4), rat(1, 2));

    // Denominator of the b24 upper bound.
    check_identity(
        &mut r,
        "sqrt_bound_square_gap",
        "(1-x)(1-2x) - (1 - 39/25 x)^2 = x(75 - 271x)/625",
        Ok(poly("(1-x)(1-2x) - (1 - 39/25 x)^2")),
        Ok(poly("1/625 x (75 - 271x)")),
    );
    check_sign(
        &mut r,
        "sqrt_bound_on_quarter",
        "x(75 - 271x) >= 0 on [0, 1/4], so 1 - 39/25 x <= sqrt((1-x)(1-2x))",
        uni(Ok(poly("x (75 - 271x)")), "x"),
        &Interval::closed(rat(0, 1), quarter.clone()),
        nonnegative,
    );
    check_sign(
        &mut r,
        "sqrt_bound_base_positive",
        "1 - 39/25 x >= 0 on [0, 1/4]",
        uni(Ok(poly("1 - 39/25 x")), "x"),
        &Interval::closed(rat(0, 1), quarter.clone()),
        nonnegative,
    );
    check_identity(
        &mut r,
        "denominator_expansion",
        "4(1-x)(1-v) + (1-2x)(1-2v) + 4(1 - 39/25 x)(1 - 39/25 v) = (5625 - 7650x - 7650v + 11084xv)/625",
        Ok(poly("4(1-x)(1-v) + (1-2x)(1-2v) + 4(1 - 39/25 x)(1 - 39/25 v)")),
        Ok(poly("1/625 (5625 - 7650x - 7650v + 11084 x v)")),
    );
    {
        // Bilinear, so positivity on the square follows from the corners.
        let d = poly("5625 - 7650x - 7650v + 11084 x v");
        let bilinear = d.degree_in("x") <= 1 && d.degree_in("v") <= 1;
        let corners = [(rat(0, 1), rat(0, 1)), (quarter.clone(), rat(0, 1)), (rat(0, 1), quarter.clone()), (quarter.clone(), quarter.clone())];
        let positive = corners
            .iter()
            .all(|(x, v)| d.eval(&[("x", x.clone()), ("v", v.clone())]).map(|w| w > rat(0, 1)).unwrap_or(false));
        r.check("denominator_positive", "5625 - 7650x - 7650v + 11084xv > 0 on [0, 1/4]^2", bilinear && positive);
    }

    // h7 > h8 is h9 > 0.
    check_identity(
        &mut r,
        "h9_definition",
        "h9 = h7 numerator - h8 * h7 denominator",
        Ok(e.get("h9").clone()),
        ok("h7_numerator - h8 h7_denominator"),
    );
    check_identity(
        &mut r,
        "h8_on_trace",
        "h8 = 1/4 (1 + 2x + 4yu + 4zv) when x + y + z + u + v = 1/2",
        at(e.get("h8"), "x", "1/2 - y - z - u - v"),
        Ok(poly("1/4 (1 + 2(1/2 - y - z - u - v) + 4 y u + 4 z v)")),
    );

    // Convexity in x on F.
    let on_simplex = e.h9_on_simplex();
    let h9_xx = second(&on_simplex, "x");
    check_identity(
        &mut r,
        "h9_xx",
        "d2/dx2 h9 = 17168 + 133008(1-2z)x + 88672yu + 22168(4z-1)(1-2(y+z+u))",
        h9_xx.clone(),
        Ok(poly("17168 + 133008(1-2z)x + 88672 y u + 22168(4z-1)(1 - 2(y+z+u))")),
    );
    check_value(
        &mut r,
        "h9_xx_corner",
        "the estimate with x = y = u = 0, z = 26/100, y + z + u = 1/2 gives 17168",
        Ok(poly("17168 + 22168(4z-1)(1 - 2w)")).and_then(|p| p.eval(&[("z", rat(26, 100)), ("w", half.clone())])),
        &Rational::from_integer(17168.into()),
    );

    // Convexity in u on F and on v = 0.
    let h9_uu = second(&on_simplex, "u");
    check_identity(&mut r, "h9_uu", "d2/du2 h9 = 272(225 - 326x)(z - y)", h9_uu, Ok(poly("272(225 - 326x)(z - y)")));
    check_value(
        &mut r,
        "h9_uu_corner",
        "272(225 - 326 * 24/100)(26/100 - 24/100) = 498984/625",
        Ok(poly("272(225 - 326x) w")).and_then(|p| p.eval(&[("x", rat(24, 100)), ("w", rat(2, 100))])),
        &rat(498984, 625),
    );
    let v_zero = h9_on(&e, &[("x", "1/2 - y - z - u"), ("v", "0")]);
    check_identity(
        &mut r,
        "h9_v0_uu",
        "d2/du2 h9(1/2 - y - z - u, y, z, u, 0) = 400(64 - 153y)",
        second(&v_zero, "u"),
        Ok(poly("400(64 - 153y)")),
    );
    check_value(
        &mut r,
        "h9_v0_uu_corner",
        "400(64 - 153 * 24/100) = 10912",
        poly("400(64 - 153y)").eval(&[("y", rat(24, 100))]),
        &Rational::from_integer(10912.into()),
    );

    // Case 1: x = u = 0.
    let case1 = h9_on(&e, &[("x", "0"), ("u", "0"), ("v", "1/2 - y - z")]);
    check_identity(&mut r, "case1_yy", "d2/dy2 h9(0, y, z, 0, 1/2 - y - z) = 200(306z - 25)", second(&case1, "y"), Ok(poly("200(306z - 25)")));
    check_value(
        &mut r,
        "case1_yy_corner",
        "200(306 * 26/100 - 25) = 10912",
        poly("200(306z - 25)").eval(&[("z", rat(26, 100))]),
        &Rational::from_integer(10912.into()),
    );
    let case1_y0 = h9_on(&e, &[("x", "0"), ("y", "0"), ("u", "0"), ("v", "1/2 - z")]);
    check_identity(
        &mut r,
        "case1_y0_form",
        "h9(0, 0, z, 0, 1/2 - z) = -150(1-2z)(102z^2 + 24z - 13)",
        case1_y0.clone(),
        Ok(poly("-150(1-2z)(102z^2 + 24z - 13)")),
    );
    check_roots(
        &mut r,
        "case1_y0_roots",
        "roots of h9(0, 0, z, 0, 1/2 - z)",
        uni(case1_y0.clone(), "z"),
        &["-0.4935350885", "0.2582409708", "0.5"],
    );
    check_sign(&mut r, "case1_y0_sign", "h9(0, 0, z, 0, 1/2 - z) <= 0 on [26/100, 1/2]", uni(case1_y0, "z"), &z_range(), nonpositive);
    let edge = h9_on(&e, &[("x", "0"), ("y", "1/2 - z"), ("u", "0"), ("v", "0")]);
    check_identity(&mut r, "shared_edge_form", "h9(0, 1/2 - z, z, 0, 0) = -1875(1-2z)", edge.clone(), Ok(poly("-1875(1-2z)")));
    check_sign(&mut r, "shared_edge_sign", "-1875(1-2z) <= 0 on [26/100, 1/2]", uni(edge, "z"), &z_range(), nonpositive);

    // Case 2: u = v = 0.
    let case2 = h9_on(&e, &[("x", "1/2 - y - z"), ("u", "0"), ("v", "0")]);
    check_identity(&mut r, "case2_yy", "d2/dy2 h9(1/2 - y - z, y, z, 0, 0) = 30600", second(&case2, "y"), Ok(poly("30600")));
    let case2_y0 = h9_on(&e, &[("x", "1/2 - z"), ("y", "0"), ("u", "0"), ("v", "0")]);
    check_identity(
        &mut r,
        "case2_y0_form",
        "h9(1/2 - z, 0, z, 0, 0) = 150(1-2z)(1-51z)",
        case2_y0.clone(),
        Ok(poly("150(1-2z)(1-51z)")),
    );
    check_sign(&mut r, "case2_y0_sign", "150(1-2z)(1-51z) <= 0 on [26/100, 1/2]", uni(case2_y0, "z"), &z_range(), nonpositive);

    // Case 3: x = v = 0.
    let case3 = h9_on(&e, &[("x", "0"), ("u", "1/2 - y - z"), ("v", "0")]);
    check_identity(&mut r, "case3_yy", "d2/dy2 h9(0, y, z, 1/2 - y - z, 0) = 40000", second(&case3, "y"), Ok(poly("40000")));
    let case3_y0 = h9_on(&e, &[("x", "0"), ("y", "0"), ("u", "1/2 - z"), ("v", "0")]);
    check_identity(&mut r, "case3_y0_form", "h9(0, 0, z, 1/2 - z, 0) = -1875(1-2z)", case3_y0.clone(), Ok(poly("-1875(1-2z)")));
    check_sign(&mut r, "case3_y0_sign", "-1875(1-2z) <= 0 on [26/100, 1/2]", uni(case3_y0, "z"), &z_range(), nonpositive);

    // The argument transported to b12 by the symbol swap.
    swap_steps(&mut r, &e);

    grid_step(&mut r, points, seed);
    r
}

const B12_TO_B24: [(&str, &str); 5] = [("b12", "b24"), ("b11", "b44"), ("b33", "b55"), ("b44", "b11"), ("b55", "b33")];

fn swap_steps(r: &mut Report, e: &CExpressions) {
    let swap = |text: &str| -> Result<MultiPoly> {
        let subs: Vec<(&str, MultiPoly)> = B12_TO_B24.iter().map(|(a, b)| (*a, MultiPoly::var(b))).collect();
        poly(text).substitute_all(&subs)
    };
    let claim = "swapping b12, b11, b33, b44, b55 for b24, b44, b55, b11, b33 gives the b24 form";
    let pairs = [
        ("swap_threshold", "b55 - 26/100", "b33 - 26/100"),
        ("swap_better_lower", "4 b12^2 - (1 + 2b44 + 4b11 b22 + 4b33 b55)", "4 b24^2 - (1 + 2b11 + 4b22 b44 + 4b33 b55)"),
        ("swap_better_upper_k", "(3 - 2b11 - 2b33)(3 - 2b22 - 2b44)", "(3 - 2b11 - 2b22)(3 - 2b44 - 2b55)"),
        ("swap_better_upper_q", "(1-b33)(1-b44)", "(1-b11)(1-b55)"),
        ("swap_better_upper_r", "(1-2b33)(1-2b44)", "(1-2b11)(1-2b55)"),
    ];
    for (step, from, to) in pairs {
        check_identity(r, step, claim, swap(from), Ok(poly(to)));
    }
    // h9 at (b44, b22, b55, b11, b33) is the b12 contradiction function.
    let at_b = |order: [&str; 5]| -> Result<MultiPoly> {
        let names = ["x", "y", "z", "u", "v"];
        let subs: Vec<(&str, MultiPoly)> = names.iter().zip(order).map(|(n, b)| (*n, MultiPoly::var(b))).collect();
        e.get("h9").substitute_all(&subs)
    };
    let b12_form = at_b(["b44", "b22", "b55", "b11", "b33"]);
    let swapped = b12_form.and_then(|p| {
        let subs: Vec<(&str, MultiPoly)> = B12_TO_B24.iter().map(|(a, b)| (*a, MultiPoly::var(b))).collect();
        p.substitute_all(&subs)
    });
    check_identity(r, "swap_h9", claim, swapped, at_b(["b11", "b22", "b33", "b44", "b55"]));
}

/// Random points of `F` on the grid `1/scale`, checked in integer arithmetic.
fn grid_step(r: &mut Report, points: usize, seed: u64) {
    let n = H9_GRID_SCALE;
    let z_min = n * 26 / 100;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: Option<[i128; 5]> = None;
    let mut worst_value = i128::MIN;
    for _ in 0..points {
        let z = rng.gen_range(z_min..=n / 2);
        let rest = n / 2 - z;
        let mut cuts = [rng.gen_range(0..=rest), rng.gen_range(0..=rest), rng.gen_range(0..=rest)];
        cuts.sort_unstable();
        let point = [cuts[0], cuts[1] - cuts[0], z, cuts[2] - cuts[1], rest - cuts[2]].map(i128::from);
        let value = CExpressions::h9_scaled(point, i128::from(n));
        if value > worst_value {
            worst_value = value;
            worst = Some(point);
        }
    }
    let claim = format!("h9 <= 0 at {points} random points of F on the grid 1/{n} (seed {seed})");
    r.check_with("h9_grid_sample", claim, worst_value <= 0, || {
        format!("h9 * {n}^4 = {worst_value} at {worst:?}")
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_passes() {
        let r = verify_appendix_c_with(2_000, 7);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn grid_catches_positive_values() {
        // Outside F (z = 0) h9 can be positive.
        let v = CExpressions::h9_scaled([5000, 0, 0, 0, 0], 10_000);
        assert!(v > 0);
    }
}
