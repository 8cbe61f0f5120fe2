//! Symbolic identities behind the pattern's bounds.

use super::{char_poly_at, symbolic_h, HExpressions};
use crate::error::Result;
use crate::poly::{identity_check, MultiPoly};
use crate::replay::{at, check_identity, poly};
use crate::report::Report;

/// 0-based index sets of the principal submatrices used below.
const IDX_245: [usize; 3] = [1, 3, 4];
const IDX_1245: [usize; 4] = [0, 1, 3, 4];
const IDX_2345: [usize; 4] = [1, 2, 3, 4];
const IDX_1235: [usize; 4] = [0, 1, 2, 4];
const IDX_134: [usize; 3] = [0, 2, 3];

/// Row `i` of the conjugated matrix is row `MIRROR[i]` of the original.
const MIRROR: [usize; 5] = [2, 4, 0, 3, 1];

fn cp(idx: &[usize], lambda: &str) -> MultiPoly {
    char_poly_at(&symbolic_h(), idx, &poly(lambda))
}

/// `f2(x, y, z, w)` at the given argument polynomials.
fn f2_at(e: &HExpressions, x: &str, y: &str, z: &str, w: &str) -> Result<MultiPoly> {
    e.get("f2")
        .substitute_all(&[("x", poly(x)), ("y", poly(y)), ("z", poly(z)), ("w", poly(w))])
}

/// Replays every identity; one step per identity.
pub fn verify_h_identities() -> Report {
    let e = HExpressions::new();
    let mut r = Report::new("pattern H identities");
    let ok = |p: &str| Ok(e.parse(p).expect("built-in text"));

    check_identity(&mut r, "s1_definition", "S1 = det(I - A[2,4,5])", Ok(cp(&IDX_245, "1")), ok("S1"));
    check_identity(
        &mut r,
        "s2_definition",
        "S2 = -8 det(I/2 - A[2,4,5])",
        Ok(cp(&IDX_245, "1/2").scale(&crate::exact::int(-8))),
        ok("S2"),
    );
    check_identity(
        &mut r,
        "cp_1245_at_one",
        "det(I - A[1,2,4,5]) = (1+2t+2s) S1 / 2 + a12^2 (a45^2 + s - 1)",
        Ok(cp(&IDX_1245, "1")),
        ok("1/2 (1+2t+2s) S1 + a12^2 (a45^2 + s - 1)"),
    );
    check_identity(
        &mut r,
        "cp_1245_at_half",
        "det(I/2 - A[1,2,4,5]) = -(t+s) S2 / 8 + a12^2 (4a45^2 + 2s - 1) / 4",
        Ok(cp(&IDX_1245, "1/2")),
        ok("-1/8 (t+s) S2 + 1/4 a12^2 (4a45^2 + 2s - 1)"),
    );
    check_identity(
        &mut r,
        "cp_2345_at_one",
        "det(I - A[2,3,4,5]) = (1-t) S1 + a35^2 (a24^2 + s - 1)",
        Ok(cp(&IDX_2345, "1")),
        ok("(1-t) S1 + a35^2 (a24^2 + s - 1)"),
    );
    check_identity(
        &mut r,
        "cp_2345_at_half",
        "det(I/2 - A[2,3,4,5]) = -(1/2 - t) S2 / 8 + a35^2 (4a24^2 + 2s - 1) / 4",
        Ok(cp(&IDX_2345, "1/2")),
        ok("-1/8 (1/2 - t) S2 + 1/4 a35^2 (4a24^2 + 2s - 1)"),
    );
    check_identity(
        &mut r,
        "small_a13_discriminant",
        "4 x discriminant of the (1,3) block = (1-2s-4t)^2 + 16 a13^2",
        Ok(poly("4((1/2 - s)^2 - 4((1/2 - t - s) t - a13^2))")),
        Ok(poly("(1 - 2s - 4t)^2 + 16 a13^2")),
    );
    check_identity(
        &mut r,
        "small_a13_margin",
        "(1+2s)^2 - (1-2s-4t)^2 = 8(t+s)(1-2t)",
        Ok(poly("(1+2s)^2 - (1-2s-4t)^2")),
        Ok(poly("8(t+s)(1-2t)")),
    );
    check_identity(
        &mut r,
        "cp_134_block",
        "det(xI - A[1,3,4]) = (x - s)(x^2 - (1/2 - s) x + (1/2 - t - s) t - a13^2)",
        Ok(char_poly_at(&symbolic_h(), &IDX_134, &poly("x"))),
        Ok(poly("(x - s)(x^2 - (1/2 - s) x + (1/2 - t - s) t - a13^2)")),
    );

    // Mirror symmetry.
    let a = symbolic_h();
    let printed = [
        ["t", "a35", "a13", "0", "0"],
        ["a35", "0", "0", "a45", "a25"],
        ["a13", "0", "1/2 - t - s", "0", "a12"],
        ["0", "a45", "0", "s", "a24"],
        ["0", "a25", "a12", "a24", "0"],
    ];
    let conj_ok = (0..5).all(|i| (0..5).all(|j| identity_check(&a[MIRROR[i]][MIRROR[j]], &poly(printed[i][j]))));
    r.check("mirror_conjugation", "P A P^-1 equals the printed mirrored matrix", conj_ok);
    let swap = [
        ("t", poly("1/2 - t - s")),
        ("a12", poly("a35")),
        ("a35", poly("a12")),
        ("a24", poly("a45")),
        ("a45", poly("a24")),
    ];
    let swap_ok = (0..5).all(|i| {
        (0..5).all(|j| a[i][j].substitute_all(&swap).map(|p| identity_check(&p, &poly(printed[i][j]))).unwrap_or(false))
    });
    r.check(
        "mirror_symbol_swap",
        "the mirrored matrix is A under t -> 1/2-t-s, a12 <-> a35, a24 <-> a45",
        swap_ok,
    );

    // Monotonicity of S1 and S2 in a25, with s = 1/2 - w and w >= 0.
    let mono = |name: &str, sign: i64| -> bool {
        e.get(name)
            .partial("a25")
            .and_then(|d| at(&d.scale(&crate::exact::int(sign)), "s", "1/2 - w"))
            .map(|d| d.coefficients_nonnegative())
            .unwrap_or(false)
    };
    r.check("s1_decreasing_in_a25", "-dS1/da25 has nonnegative coefficients in a24, a25, a45, 1/2 - s", mono("S1", -1));
    r.check("s2_increasing_in_a25", "dS2/da25 has nonnegative coefficients in a24, a25, a45, 1/2 - s", mono("S2", 1));

    // Values at a24 = a45 = sqrt(1-2s)/2, with `h` standing for that root.
    let at_edge = |name: &str| -> Result<MultiPoly> {
        let p = e.get(name).substitute_all(&[("a24", poly("h")), ("a45", poly("h"))])?;
        Ok(p.reduce_radical("h", &poly("(1 - 2s)/4")))
    };
    check_identity(
        &mut r,
        "s1_at_small_edge",
        "S1 at a24 = a45 = sqrt(1-2s)/2 is (1+a25)(1-2(1-s)a25)/2",
        at_edge("S1"),
        Ok(poly("1/2 (1 + a25)(1 - 2(1-s) a25)")),
    );
    check_identity(
        &mut r,
        "s2_at_small_edge",
        "S2 at a24 = a45 = sqrt(1-2s)/2 is (1+2a25)^2 (1-2s)",
        at_edge("S2"),
        Ok(poly("(1 + 2a25)^2 (1 - 2s)")),
    );

    // The quadratic family f1, g1 and its roots.
    check_identity(
        &mut r,
        "f1_from_bounds",
        "f1 = (t+s)(4x+4y+2s-1)(1-s-x) - (1+2t+2s)(1-s-x-y)(4x+2s-1)",
        ok("f1"),
        ok("(t+s)(4x + 4y + 2s - 1)(1 - s - x) - (1+2t+2s)(1 - s - x - y)(4x + 2s - 1)"),
    );
    check_identity(&mut r, "f1_discriminant", "C2^2 - 16 C1 C3 = C1 g1", ok("C2^2 - 16 C1 C3"), ok("C1 g1"));
    check_identity(
        &mut r,
        "f1_y_slope",
        "df1/dy = 4(1+t+s) x - 1 + 2t + 4s",
        e.get("f1").partial("y"),
        ok("4(1+t+s) x - 1 + 2t + 4s"),
    );
    check_identity(
        &mut r,
        "f1_at_left_end",
        "f1(1/4 - s/2, y) = (3-2s)(t+s) y",
        at(e.get("f1"), "x", "1/4 - 1/2 s"),
        ok("(3-2s)(t+s) y"),
    );
    check_identity(
        &mut r,
        "c3_at_left_end",
        "C3(1/4 - s/2) = (1-2s)(3-2s)(1+2t+2s)/4",
        at(e.get("C3"), "y", "1/4 - 1/2 s"),
        ok("1/4 (1-2s)(3-2s)(1+2t+2s)"),
    );
    check_identity(
        &mut r,
        "c3_at_right_end",
        "C3(3/4 - s/2) = 3s(1-2s)/2 + t(5-8s)/2 + 2s^3 + 2ts^2 + 1/4",
        at(e.get("C3"), "y", "3/4 - 1/2 s"),
        ok("3/2 s (1-2s) + 1/2 t (5 - 8s) + 2s^3 + 2t s^2 + 1/4"),
    );
    check_identity(
        &mut r,
        "g1_discriminant",
        "discriminant of g1 = 256 (3-2s)^2 (1+2t+2s)(t+s)",
        Ok(discriminant(e.get("g1"), "y")),
        ok("256 (3-2s)^2 (1+2t+2s)(t+s)"),
    );
    for plus in [true, false] {
        let name = if plus { "q1_plus_root" } else { "q1_minus_root" };
        r.check_with(name, "the q1 surd is a root of g1", e.q1(plus).cleared_value_in(e.get("g1"), "y").is_zero(), || {
            "nonzero remainder".into()
        });
    }
    let q1 = e.q1(true);
    check_identity(
        &mut r,
        "q1_product",
        "q1+ q1- = (3-2s)^2 / 16",
        Ok(q1.a.mul(&q1.a).sub(&q1.b.mul(&q1.b).mul(&q1.c)).scale(&crate::exact::int(16))),
        Ok(poly("(3-2s)^2").mul(&q1.d).mul(&q1.d)),
    );
    for plus in [true, false] {
        let name = if plus { "r1_plus_root" } else { "r1_minus_root" };
        r.check_with(name, "the r1 surd is a root of f1 in x", e.r1(plus).cleared_value_in(e.get("f1"), "x").is_zero(), || {
            "nonzero remainder".into()
        });
    }
    check_identity(
        &mut r,
        "g1_at_left_end",
        "g1(1/4 - s/2) = 4(1+t+s) - 4(1-2s)(3-2s)(t+s)",
        at(e.get("g1"), "y", "1/4 - 1/2 s"),
        ok("4(1+t+s) - 4(1-2s)(3-2s)(t+s)"),
    );
    let x_min = e.x_min();
    let f1_left = at(e.get("f1"), "y", "1/4 - 1/2 s");
    r.check(
        "x_min_root",
        "x_min is a root of f1(x, 1/4 - s/2)",
        f1_left.map(|f| x_min.cleared_value_in(&f, "x").is_zero()).unwrap_or(false),
    );

    // f2 and its reductions.
    check_identity(
        &mut r,
        "cp_1235_at_one",
        "det(I - A[1,2,3,5]) = f2(a12, a13, a25, a35)",
        Ok(cp(&IDX_1235, "1")),
        f2_at(&e, "a12", "a13", "a25", "a35"),
    );
    let f2_check = f2_at(&e, "a12", "1/2 q", "a25", "a35").map(|p| p.reduce_radical("q", &poly("2(1-2t)(t+s)")));
    check_identity(
        &mut r,
        "f2_at_small_a13",
        "f2 at a13 = sqrt(2(1-2t)(t+s))/2 matches the printed expansion",
        f2_check,
        Ok(poly(
            "-1/2 (1+s) a25^2 - a12 a35 q a25 + (t - 1 + a35^2) a12^2 + 1/2 (1+s) - 1/2 (1+2t+2s) a35^2",
        )),
    );
    let f2_zero = f2_at(&e, "a12", "1/2 q", "0", "a35").map(|p| p.reduce_radical("q", &poly("2(1-2t)(t+s)")));
    check_identity(
        &mut r,
        "f2_without_a25",
        "f2(a12, a13_edge, 0, a35) = (2a12^2 - 1 - 2t - 2s) a35^2 / 2 + (t-1) a12^2 + (1+s)/2",
        f2_zero,
        Ok(poly("1/2 (2a12^2 - 1 - 2t - 2s) a35^2 + (t - 1) a12^2 + 1/2 (1+s)")),
    );
    // Substituting a12^2 = 2(t+s)N / (4 Dx) and a35^2 = (1-2t)N / (4 Dy) into the
    // even-power form above and clearing 8 Dx Dy gives f3, with x = a45^2, y = a24^2.
    let from_f2 = f2_at(&e, "a12", "1/2 q", "0", "a35").map(|p| {
        let p = p.reduce_radical("q", &poly("2(1-2t)(t+s)"));
        let odd = !p.coefficient_of("a12", 1).is_zero() || !p.coefficient_of("a35", 1).is_zero();
        let c = |i, j| p.coefficient_of("a12", i).coefficient_of("a35", j);
        let n = poly("4x + 4y + 2s - 1");
        let (dx, dy) = (poly("4x + 2s - 1"), poly("4y + 2s - 1"));
        let a12sq = poly("2(t+s)").mul(&n);
        let a35sq = poly("1 - 2t").mul(&n);
        let cleared = c(2, 2)
            .mul(&a12sq)
            .mul(&a35sq)
            .scale(&crate::exact::rat(1, 2))
            .add(&c(2, 0).mul(&a12sq).mul(&dy).scale(&crate::exact::int(2)))
            .add(&c(0, 2).mul(&a35sq).mul(&dx).scale(&crate::exact::int(2)))
            .add(&c(0, 0).mul(&dx).mul(&dy).scale(&crate::exact::int(8)));
        if odd {
            MultiPoly::var("odd_powers_present")
        } else {
            cleared
        }
    });
    check_identity(
        &mut r,
        "f3_from_f2",
        "8 (4x+2s-1)(4y+2s-1) f2 at the edge values of a12, a13, a35 equals f3(x, y)",
        from_f2,
        ok("f3"),
    );
    check_identity(
        &mut r,
        "f3_at_corner",
        "f3(x, y, 1/2, 0) = -24 (x-y)^2",
        e.get("f3").substitute_all(&[("s", poly("1/2")), ("t", poly("0"))]),
        Ok(poly("-24 (x - y)^2")),
    );
    check_identity(
        &mut r,
        "f3_leading_y",
        "coefficient of y^2 in f3 is -16(3-2t)(t+s)",
        Ok(e.get("f3").coefficient_of("y", 2)),
        Ok(poly("-16(3-2t)(t+s)")),
    );
    check_identity(
        &mut r,
        "f3_discriminant",
        "discriminant of f3 in y equals g2(x)",
        Ok(discriminant(e.get("f3"), "y")),
        ok("g2"),
    );
    check_identity(
        &mut r,
        "c4_minimum",
        "C4 - 2(1+s)(1-2s) = (4t - (1-2s))^2",
        ok("C4 - 2(1+s)(1-2s)"),
        ok("(4t - (1-2s))^2"),
    );
    check_identity(
        &mut r,
        "q2_radicand",
        "C5^2 - (3+2s) C4 C6 = 64 (1-2t)^2 (3-2t)(1+s)(t+s)^3",
        ok("C5^2 - (3+2s) C4 C6"),
        ok("64 (1-2t)^2 (3-2t)(1+s)(t+s)^3"),
    );
    for plus in [true, false] {
        let name = if plus { "q2_plus_root" } else { "q2_minus_root" };
        r.check_with(name, "the q2 surd is a root of g2", e.q2(plus).cleared_value_in(e.get("g2"), "x").is_zero(), || {
            "nonzero remainder".into()
        });
    }
    r
}

/// `b^2 - 4ac` of a quadratic in `var`.
fn discriminant(p: &MultiPoly, var: &str) -> MultiPoly {
    let a = p.coefficient_of(var, 2);
    let b = p.coefficient_of(var, 1);
    let c = p.coefficient_of(var, 0);
    b.mul(&b).sub(&a.mul(&c).scale(&crate::exact::int(4)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = verify_h_identities();
        assert!(r.all_passed(), "{r}");
        assert!(r.len() >= 30);
    }
}
