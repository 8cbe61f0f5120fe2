//! Replays of the two certificates that bound the domain of `f3` by the roots of `g2`.
//!
//! Each claim is one report step: polynomial identities by expansion, sign claims
//! by Sturm sequences on closed or half-open intervals, printed roots by isolation.

use super::HExpressions;
use crate::error::Result;
use crate::exact::{rat, Rational};
use crate::poly::{Interval, MultiPoly, SignClass, UniPoly};
use crate::replay::{at, check_identity, check_roots, check_sign, check_value, poly, uni};
use crate::report::Report;

fn positive(c: SignClass) -> bool {
    c == SignClass::StrictlyPositive
}

fn negative(c: SignClass) -> bool {
    c == SignClass::StrictlyNegative
}

fn nonpositive(c: SignClass) -> bool {
    c.is_nonpositive()
}

fn nonnegative(c: SignClass) -> bool {
    c.is_nonnegative()
}

fn closed(lo: Rational, hi: Rational) -> Interval {
    Interval::closed(lo, hi)
}

fn closed_open(lo: Rational, hi: Rational) -> Interval {
    Interval::closed_open(lo, hi)
}

/// `p` on the edge `t = 1/4 - s/2`, as a polynomial in `s`.
fn on_diagonal(p: &MultiPoly) -> Result<UniPoly> {
    uni(at(p, "t", "1/4 - 1/2 s"), "s")
}

fn fix(p: &MultiPoly, name: &str, value: Rational) -> Result<MultiPoly> {
    p.restrict(name, &value)
}

/// The lower end of the domain is at least the smaller root of `g2`.
pub fn verify_appendix_a() -> Report {
    let e = HExpressions::new();
    let mut r = Report::new("lower end of the x range versus the smaller root of g2");
    let ok = |text: &str| Ok(e.parse(text).expect("built-in text"));
    let h1 = e.get("h1");
    let h2 = e.get("h2");
    let (zero, half, quarter) = (rat(0, 1), rat(1, 2), rat(1, 4));

    check_identity(
        &mut r,
        "x_min_linear_bound",
        "4(1-s)(1+t+s) - 2(1+t+s) + (1-2s)(3-2s)(t+s) = (1-2s)((5-2s)(t+s) + 2)",
        ok("4(1-s)(1+t+s) - 2(1+t+s) + (1-2s)(3-2s)(t+s)"),
        ok("(1-2s)((5-2s)(t+s) + 2)"),
    );
    check_identity(
        &mut r,
        "h1_definition",
        "(t+s) h1 = 2(1+t+s) C5 - (3+2s)((5-2s)(t+s) + 2) C4",
        ok("(t+s) h1"),
        ok("2(1+t+s) C5 - (3+2s)((5-2s)(t+s) + 2) C4"),
    );
    check_identity(
        &mut r,
        "h2_definition",
        "256(1-2t)^2(3-2t)(1+s)(t+s)(1+t+s)^2 - h1^2 = -(3+2s) C4 h2",
        ok("256(1-2t)^2 (3-2t)(1+s)(t+s)(1+t+s)^2 - h1^2"),
        ok("-(3+2s) C4 h2"),
    );

    // Concavity of h1 in t.
    let h1_tt = h1.partial_n("t", 2);
    check_identity(
        &mut r,
        "h1_tt",
        "d2h1/dt2 = 128s^2 + 96s + 192t - 304",
        h1_tt.clone(),
        Ok(poly("128s^2 + 96s + 192t - 304")),
    );
    check_identity(
        &mut r,
        "h1_tt_at_edge",
        "d2h1/dt2 at t = 1/4 - s/2 is 128s^2 - 256",
        h1_tt.as_ref().map_err(Clone::clone).and_then(|p| at(p, "t", "1/4 - 1/2 s")),
        Ok(poly("128s^2 - 256")),
    );
    check_sign(
        &mut r,
        "h1_concave_in_t",
        "128s^2 - 256 < 0 on [0, 1/2]",
        uni(Ok(poly("128s^2 - 256")), "s"),
        &closed(zero.clone(), half.clone()),
        negative,
    );

    // h1 on t = 0.
    let h1_t0 = fix(h1, "t", zero.clone());
    check_identity(&mut r, "h1_t0_form", "h1(s, 0) = -24s^3 + 12s^2 + 78s - 3", h1_t0.clone(), Ok(poly("-24s^3 + 12s^2 + 78s - 3")));
    let s0 = check_roots(
        &mut r,
        "h1_t0_roots",
        "roots of h1(s, 0)",
        uni(h1_t0.clone(), "s"),
        &["-1.591478567", "0.03825363319", "2.053224934"],
    );
    if let Some(roots) = &s0 {
        let s0 = &roots[1];
        check_sign(
            &mut r,
            "h1_t0_negative_below_s0",
            "h1(s, 0) < 0 on [0, s0)",
            uni(h1_t0.clone(), "s"),
            &closed(zero.clone(), s0.lo.clone()),
            negative,
        );
        check_sign(
            &mut r,
            "h1_t0_positive_above_s0",
            "h1(s, 0) > 0 on (s0, 1/2]",
            uni(h1_t0.clone(), "s"),
            &closed(s0.hi.clone(), half.clone()),
            positive,
        );
        r.check("s0_below_4_percent", "s0 < 4/100", s0.hi < rat(4, 100));
    }

    // h1 on the diagonal edge.
    let h1_edge = at(h1, "t", "1/4 - 1/2 s");
    check_identity(
        &mut r,
        "h1_edge_form",
        "h1(s, 1/4 - s/2) = -2(1+s)(8s^3 - 4s^2 - 22s - 1)",
        h1_edge.clone(),
        Ok(poly("-2(1+s)(8s^3 - 4s^2 - 22s - 1)")),
    );
    check_roots(
        &mut r,
        "h1_edge_roots",
        "roots of h1(s, 1/4 - s/2)",
        uni(h1_edge.clone(), "s"),
        &["-1.400220700", "-1", "-0.04587223942", "1.946092939"],
    );
    check_sign(
        &mut r,
        "h1_edge_positive",
        "h1(s, 1/4 - s/2) > 0 on [0, 1/2)",
        uni(h1_edge, "s"),
        &closed_open(zero.clone(), half.clone()),
        positive,
    );

    // Convexity of h1 in s for small s.
    check_identity(
        &mut r,
        "h1_ss",
        "d2h1/ds2 = 128t^2 - 32t + 48(8t - 3)s + 24",
        h1.partial_n("s", 2),
        Ok(poly("128t^2 - 32t + 48(8t - 3)s + 24")),
    );
    check_identity(
        &mut r,
        "h1_ss_at_4_percent",
        "d2h1/ds2 at s = 4/100 is 128t^2 - 416t/25 + 456/25",
        h1.partial_n("s", 2).and_then(|p| fix(&p, "s", rat(4, 100))),
        Ok(poly("128t^2 - 416/25 t + 456/25")),
    );
    check_sign(
        &mut r,
        "h1_convex_in_s",
        "128t^2 - 416t/25 + 456/25 > 0 on [0, 3/8]",
        uni(Ok(poly("128t^2 - 416/25 t + 456/25")), "t"),
        &closed(zero.clone(), rat(3, 8)),
        positive,
    );
    let h1_s_at0 = h1.partial("s").and_then(|p| fix(&p, "s", zero.clone()));
    check_identity(&mut r, "h1_s_at_zero", "dh1/ds at s = 0 is 48t^2 - 168t + 78", h1_s_at0, Ok(poly("48t^2 - 168t + 78")));
    check_sign(
        &mut r,
        "h1_increasing_in_s",
        "48t^2 - 168t + 78 - 36 >= 0 on [0, 1/4]",
        uni(Ok(poly("48t^2 - 168t + 42")), "t"),
        &closed(zero.clone(), quarter.clone()),
        nonnegative,
    );

    let h1_s0 = fix(h1, "s", zero.clone());
    check_identity(&mut r, "h1_s0_form", "h1(0, t) = 32t^3 - 152t^2 + 56t - 3", h1_s0.clone(), Ok(poly("32t^3 - 152t^2 + 56t - 3")));
    check_roots(
        &mut r,
        "h1_s0_roots",
        "roots of h1(0, t)",
        uni(h1_s0, "t"),
        &["0.06482035236", "0.3322609755", "4.352918672"],
    );

    // Convexity of h2 in t.
    let h2_tt = h2.partial_n("t", 2);
    check_identity(
        &mut r,
        "h2_tt",
        "d2h2/dt2 = 256s^3 + 128s^2 + 1536ts + 768t^2 - 1472s - 1152t + 704",
        h2_tt.clone(),
        Ok(poly("256s^3 + 128s^2 + 1536t s + 768t^2 - 1472s - 1152t + 704")),
    );
    let h2_ttt = h2.partial_n("t", 3);
    check_identity(&mut r, "h2_ttt", "d3h2/dt3 = 1536t + 1536s - 1152", h2_ttt.clone(), Ok(poly("1536t + 1536s - 1152")));
    check_identity(
        &mut r,
        "h2_ttt_at_edge",
        "d3h2/dt3 at t = 1/4 - s/2 is -768(1-s)",
        h2_ttt.and_then(|p| at(&p, "t", "1/4 - 1/2 s")),
        Ok(poly("-768(1 - s)")),
    );
    let h2_tt_edge = h2_tt.and_then(|p| at(&p, "t", "1/4 - 1/2 s"));
    check_identity(
        &mut r,
        "h2_tt_at_edge",
        "d2h2/dt2 at t = 1/4 - s/2 is 256s^3 - 448s^2 - 704s + 464",
        h2_tt_edge.clone(),
        Ok(poly("256s^3 - 448s^2 - 704s + 464")),
    );
    check_roots(
        &mut r,
        "h2_tt_edge_roots",
        "roots of 256s^3 - 448s^2 - 704s + 464",
        uni(h2_tt_edge.clone(), "s"),
        &["-1.333013968", "0.5332693631", "2.549744605"],
    );
    check_sign(
        &mut r,
        "h2_convex_in_t",
        "256s^3 - 448s^2 - 704s + 464 > 0 on [0, 1/2)",
        uni(h2_tt_edge, "s"),
        &closed_open(zero.clone(), half.clone()),
        positive,
    );

    // h2 on t = 0.
    let h2_t0 = fix(h2, "t", zero.clone());
    check_identity(
        &mut r,
        "h2_t0_form",
        "h2(s, 0) = (1-2s)(24s^3 - 36s^2 - 134s + 1)",
        h2_t0.clone(),
        Ok(poly("(1 - 2s)(24s^3 - 36s^2 - 134s + 1)")),
    );
    let s1 = check_roots(
        &mut r,
        "h2_t0_roots",
        "roots of h2(s, 0)",
        uni(h2_t0.clone(), "s"),
        &["-1.733921023", "0.007447858016", "0.5", "3.226473165"],
    );
    if let Some(roots) = &s1 {
        let s1 = &roots[1];
        check_sign(
            &mut r,
            "h2_t0_nonnegative_below_s1",
            "h2(s, 0) >= 0 on [0, s1]",
            uni(h2_t0.clone(), "s"),
            &closed(zero.clone(), s1.lo.clone()),
            nonnegative,
        );
        check_sign(
            &mut r,
            "h2_t0_negative_above_s1",
            "h2(s, 0) < 0 on (s1, 1/2)",
            uni(h2_t0.clone(), "s"),
            &Interval::open(s1.hi.clone(), half.clone()),
            negative,
        );
        r.check("s1_below_1_percent", "s1 < 1/100", s1.hi < rat(1, 100));
    }

    let h2_edge = at(h2, "t", "1/4 - 1/2 s");
    check_identity(
        &mut r,
        "h2_edge_form",
        "h2(s, 1/4 - s/2) = (1-2s)(16s^2 + 22s + 3)(4s^2 - 8s - 13)/4",
        h2_edge.clone(),
        Ok(poly("1/4 (1 - 2s)(16s^2 + 22s + 3)(4s^2 - 8s - 13)")),
    );
    check_roots(
        &mut r,
        "h2_edge_roots",
        "roots of h2(s, 1/4 - s/2)",
        uni(h2_edge.clone(), "s"),
        &["-1.221500234", "-1.061552813", "-0.1534997659", "0.5", "3.061552813"],
    );
    check_sign(
        &mut r,
        "h2_edge_negative",
        "h2(s, 1/4 - s/2) < 0 on [0, 1/2)",
        uni(h2_edge, "s"),
        &closed_open(zero.clone(), half.clone()),
        negative,
    );

    // Convexity of h2 in s.
    let h2_ss = h2.partial_n("s", 2);
    check_identity(
        &mut r,
        "h2_ss",
        "d2h2/ds2 = (128 + 768s)t^2 + (1536s^2 - 1152s - 1024)t - 576s^2 + 576s + 464",
        h2_ss.clone(),
        Ok(poly("(128 + 768s) t^2 + (1536s^2 - 1152s - 1024) t - 576s^2 + 576s + 464")),
    );
    let h2_sst = h2_ss.clone().and_then(|p| p.partial("t"));
    check_identity(
        &mut r,
        "h2_sst",
        "d/dt d2h2/ds2 = (256 + 1536s)t + 1536s^2 - 1152s - 1024",
        h2_sst.clone(),
        Ok(poly("(256 + 1536s) t + 1536s^2 - 1152s - 1024")),
    );
    check_identity(
        &mut r,
        "h2_sst_at_edge",
        "d/dt d2h2/ds2 at t = 1/4 - s/2 is 768s^2 - 896s - 960",
        h2_sst.and_then(|p| at(&p, "t", "1/4 - 1/2 s")),
        Ok(poly("768s^2 - 896s - 960")),
    );
    check_sign(
        &mut r,
        "h2_sst_bound",
        "768s^2 - 896s - 960 <= -768 on [0, 1/2]",
        uni(Ok(poly("768s^2 - 896s - 192")), "s"),
        &closed(zero.clone(), half.clone()),
        nonpositive,
    );
    check_sign(
        &mut r,
        "h2_sst_coefficient",
        "256 + 1536s > 0 on [0, 1/2], so the t-slope is largest at the edge",
        uni(Ok(poly("256 + 1536s")), "s"),
        &closed(zero.clone(), half.clone()),
        positive,
    );
    let h2_ss_edge = h2_ss.and_then(|p| at(&p, "t", "1/4 - 1/2 s"));
    check_identity(
        &mut r,
        "h2_ss_at_edge",
        "d2h2/ds2 at t = 1/4 - s/2 is 8(3-2s)(36s^2 + 40s + 9)",
        h2_ss_edge.clone(),
        Ok(poly("8(3 - 2s)(36s^2 + 40s + 9)")),
    );
    check_sign(
        &mut r,
        "h2_convex_in_s",
        "8(3-2s)(36s^2 + 40s + 9) > 0 on [0, 1/2)",
        uni(h2_ss_edge, "s"),
        &closed_open(zero.clone(), half.clone()),
        positive,
    );

    let h2_s0 = fix(h2, "s", zero.clone());
    check_identity(
        &mut r,
        "h2_s0_form",
        "h2(0, t) = 64t^4 - 192t^3 + 352t^2 - 120t + 1",
        h2_s0.clone(),
        Ok(poly("64t^4 - 192t^3 + 352t^2 - 120t + 1")),
    );
    let t1 = check_roots(
        &mut r,
        "h2_s0_roots",
        "real roots of h2(0, t)",
        uni(h2_s0.clone(), "t"),
        &["0.008546600862", "0.4150148497"],
    );
    if let Some(roots) = &t1 {
        let t1 = &roots[0];
        check_sign(
            &mut r,
            "h2_s0_nonnegative_below_t1",
            "h2(0, t) >= 0 on [0, t1]",
            uni(h2_s0.clone(), "t"),
            &closed(zero.clone(), t1.lo.clone()),
            nonnegative,
        );
        check_sign(
            &mut r,
            "h2_s0_negative_above_t1",
            "h2(0, t) < 0 on (t1, 1/4]",
            uni(h2_s0.clone(), "t"),
            &closed(t1.hi.clone(), quarter.clone()),
            negative,
        );
        r.check("t1_below_1_percent", "t1 < 1/100", t1.hi < rat(1, 100));
    }

    let h2_far = at(h2, "s", "1/2 - 2t");
    check_identity(
        &mut r,
        "h2_far_form",
        "h2(1/2 - 2t, t) = 16t(2t^2 + t - 2)(32t^2 - 38t + 9)",
        h2_far.clone(),
        Ok(poly("16t (2t^2 + t - 2)(32t^2 - 38t + 9)")),
    );
    check_roots(
        &mut r,
        "h2_far_roots",
        "roots of h2(1/2 - 2t, t)",
        uni(h2_far.clone(), "t"),
        &["-1.280776406", "0", "0.3267498830", "0.7807764064", "0.8607501170"],
    );
    check_sign(
        &mut r,
        "h2_far_negative",
        "h2(1/2 - 2t, t) < 0 on (0, 1/4]",
        uni(h2_far, "t"),
        &Interval { lo: zero.clone(), hi: quarter.clone(), lo_closed: false, hi_closed: true },
        negative,
    );

    check_value(
        &mut r,
        "h1_spot_value",
        "h1(1/100, 1/100) = -5283621/3125000",
        h1.eval(&[("s", rat(1, 100)), ("t", rat(1, 100))]),
        &rat(-5_283_621, 3_125_000),
    );
    check_identity(
        &mut r,
        "c4_positive",
        "C4 = 2(1+s)(1-2s) + (4t - 1 + 2s)^2",
        ok("C4"),
        ok("2(1+s)(1-2s) + (4t - 1 + 2s)^2"),
    );
    check_sign(
        &mut r,
        "c4_floor_positive",
        "2(1+s)(1-2s) > 0 on [0, 1/2)",
        uni(Ok(poly("2(1+s)(1-2s)")), "s"),
        &closed_open(zero, half),
        positive,
    );
    r
}

/// The upper end of the domain is at most the larger root of `g2`.
pub fn verify_appendix_b() -> Report {
    let e = HExpressions::new();
    let mut r = Report::new("upper end of the x range versus the larger root of g2");
    let ok = |text: &str| Ok(e.parse(text).expect("built-in text"));
    let (zero, half, quarter) = (rat(0, 1), rat(1, 2), rat(1, 4));
    let h3 = e.get("h3");
    let h6 = e.get("h6");

    check_identity(
        &mut r,
        "h3_definition",
        "3(3-2s)(5-6t) - (3-2t)(3+4t-2s) = 4 h3",
        ok("3(3-2s)(5-6t) - (3-2t)(3+4t-2s)"),
        ok("4 h3"),
    );
    check_identity(
        &mut r,
        "h3_s_coefficient",
        "coefficient of s in h3 is -(6 - 8t)",
        Ok(h3.coefficient_of("s", 1)),
        Ok(poly("-(6 - 8t)")),
    );
    check_sign(
        &mut r,
        "h3_decreasing_in_s",
        "-(6 - 8t) < 0 on [0, 1/4]",
        uni(Ok(poly("-(6 - 8t)")), "t"),
        &closed(zero.clone(), quarter.clone()),
        negative,
    );
    let h3_far = at(h3, "s", "1/2 - 2t");
    check_identity(&mut r, "h3_far_form", "h3(1/2 - 2t, t) = -14t^2 + t + 6", h3_far.clone(), Ok(poly("-14t^2 + t + 6")));
    check_sign(
        &mut r,
        "h3_far_floor",
        "-14t^2 + t + 6 - 41/8 >= 0 on [0, 1/4]",
        uni(h3_far.map(|p| p.sub(&poly("41/8"))), "t"),
        &closed(zero.clone(), quarter.clone()),
        nonnegative,
    );
    check_identity(
        &mut r,
        "h4_definition",
        "9(3-2s)^2(1-t)(1-2t) - h3^2 = -t(3-2t) h4",
        ok("9(3-2s)^2 (1-t)(1-2t) - h3^2"),
        ok("-t(3-2t) h4"),
    );
    check_identity(
        &mut r,
        "h4_dominated",
        "h4 - (4s^2 + 27t - 9) = -16ts - 2t^2",
        ok("h4 - (4s^2 + 27t - 9)"),
        Ok(poly("-16t s - 2t^2")),
    );
    check_value(
        &mut r,
        "h4_corner",
        "4s^2 + 27t - 9 at s = 1/2, t = 1/4 is -5/4",
        poly("4s^2 + 27t - 9").eval(&[("s", half.clone()), ("t", quarter.clone())]),
        &rat(-5, 4),
    );
    check_identity(
        &mut r,
        "h5_definition",
        "4(t+s) h5 = (3+2s)(3+4t-2s) C4 - 3(1-2s) C5",
        ok("4(t+s) h5"),
        ok("(3+2s)(3+4t-2s) C4 - 3(1-2s) C5"),
    );
    check_identity(
        &mut r,
        "h6_definition",
        "36(1-2t)^2(1-2s)^2(3-2t)(1+s)(t+s) - h5^2 = -(3+2s) C4 h6",
        ok("36(1-2t)^2 (1-2s)^2 (3-2t)(1+s)(t+s) - h5^2"),
        ok("-(3+2s) C4 h6"),
    );
    let lead = h6.coefficient_of("t", 2);
    check_identity(&mut r, "h6_leading", "coefficient of t^2 in h6 is 36s^2 + 44s + 33", Ok(lead.clone()), Ok(poly("36s^2 + 44s + 33")));
    check_sign(
        &mut r,
        "h6_convex_in_t",
        "36s^2 + 44s + 33 > 0 on [0, 1/2]",
        uni(Ok(lead), "s"),
        &closed(zero.clone(), half.clone()),
        positive,
    );
    let h6_t0 = fix(h6, "t", zero.clone());
    check_identity(&mut r, "h6_t0_form", "h6(s, 0) = -12s(1-2s)", h6_t0.clone(), Ok(poly("-12s (1 - 2s)")));
    check_sign(
        &mut r,
        "h6_t0_nonpositive",
        "h6(s, 0) <= 0 on [0, 1/2)",
        uni(h6_t0, "s"),
        &closed_open(zero.clone(), half.clone()),
        nonpositive,
    );
    let h6_edge = on_diagonal(h6);
    check_identity(
        &mut r,
        "h6_edge_form",
        "h6(s, 1/4 - s/2) = -(1-2s)(72s^3 + 116s^2 + 86s + 15)/16",
        at(h6, "t", "1/4 - 1/2 s"),
        Ok(poly("-1/16 (1 - 2s)(72s^3 + 116s^2 + 86s + 15)")),
    );
    check_sign(
        &mut r,
        "h6_edge_negative",
        "h6(s, 1/4 - s/2) < 0 on [0, 1/2)",
        h6_edge,
        &closed_open(zero.clone(), half.clone()),
        negative,
    );
    // The cubic factor has no printed roots; isolate them and confirm none lies in [0, 1/2].
    let factor = UniPoly::from_ints(&[15, 86, 116, 72]);
    match crate::poly::isolate_real_roots(&factor, crate::replay::ROOT_DIGITS) {
        Ok(roots) => {
            let outside = roots.iter().all(|iv| iv.hi < zero || iv.lo > half);
            let listed: Vec<String> = roots.iter().map(|iv| crate::poly::describe_root(iv, 10)).collect();
            r.check_with(
                "h6_edge_factor_roots",
                "the real roots of 72s^3 + 116s^2 + 86s + 15 lie outside [0, 1/2]",
                outside,
                || listed.join(", "),
            );
        }
        Err(err) => r.fail("h6_edge_factor_roots", "isolate the cubic factor", err.to_string()),
    }
    r
}

/// Both certificates in one report.
pub fn verify_appendix_ab() -> Report {
    let mut r = verify_appendix_a();
    r.title = "range of x versus the roots of g2".into();
    r.extend(verify_appendix_b());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_end_replay_passes() {
        let r = verify_appendix_a();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn upper_end_replay_passes() {
        let r = verify_appendix_b();
        assert!(r.all_passed(), "{r}");
    }
}
