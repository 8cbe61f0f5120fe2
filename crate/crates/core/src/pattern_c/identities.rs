//! Exact replays of the symbolic claims behind the pattern's bound chain:
//! permutation conjugations, the 4x4 expansions, the algebraic equivalences,
//! the maximum of `f4`, and the symbol swaps between mirrored lemmas.

use super::expressions::CExpressions;
use super::params::symbolic_c;
use crate::error::Result;
use crate::pattern_h::{char_poly_at, symbolic_h, H_SYMBOLS};
use crate::poly::{identity_check, MultiPoly};
use crate::replay::{check_identity, poly};
use crate::report::Report;

/// Cyclic relabelling whose powers move every diagonal entry to every position.
pub const Q_PERM: [usize; 5] = [1, 3, 0, 4, 2];
/// Relabelling that swaps the roles of `b11` and `b44`.
pub const P_PERM: [usize; 5] = [3, 1, 4, 0, 2];

type SymMat = Vec<Vec<MultiPoly>>;

/// `out[i][j] = m[perm[i]][perm[j]]`, i.e. `P M P^-1` for the permutation matrix with rows `e_perm[i]`.
fn conjugate(m: &SymMat, perm: &[usize]) -> SymMat {
    perm.iter().map(|&i| perm.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

fn sub(m: &SymMat, idx: &[usize]) -> SymMat {
    conjugate(m, idx)
}

fn parse_matrix(rows: &[&[&str]]) -> SymMat {
    rows.iter().map(|r| r.iter().map(|t| poly(t)).collect()).collect()
}

fn same_matrix(a: &SymMat, b: &SymMat) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(ra, rb)| ra.len() == rb.len() && ra.iter().zip(rb).all(|(x, y)| identity_check(x, y)))
}

fn zero_set(m: &SymMat) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if e.is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

fn printed_orbit() -> Vec<SymMat> {
    vec![
        parse_matrix(&[
            &["b22", "b24", "b12", "0", "0"],
            &["b24", "b44", "0", "b45", "0"],
            &["b12", "0", "b11", "0", "b13"],
            &["0", "b45", "0", "b55", "b35"],
            &["0", "0", "b13", "b35", "b33"],
        ]),
        parse_matrix(&[
            &["b44", "b45", "b24", "0", "0"],
            &["b45", "b55", "0", "b35", "0"],
            &["b24", "0", "b22", "0", "b12"],
            &["0", "b35", "0", "b33", "b13"],
            &["0", "0", "b12", "b13", "b11"],
        ]),
        parse_matrix(&[
            &["b55", "b35", "b45", "0", "0"],
            &["b35", "b33", "0", "b13", "0"],
            &["b45", "0", "b44", "0", "b24"],
            &["0", "b13", "0", "b11", "b12"],
            &["0", "0", "b24", "b12", "b22"],
        ]),
        parse_matrix(&[
            &["b33", "b13", "b35", "0", "0"],
            &["b13", "b11", "0", "b12", "0"],
            &["b35", "0", "b55", "0", "b45"],
            &["0", "b12", "0", "b22", "b24"],
            &["0", "0", "b45", "b24", "b44"],
        ]),
    ]
}

/// A 4x4 block of the matrix, its relabelling, the printed result, and the
/// generic-block variables in the order `x1..x4, y1..y3`.
struct Block {
    step: &'static str,
    idx: [usize; 4],
    perm: [usize; 4],
    printed: [[&'static str; 4]; 4],
}

const BLOCKS: [Block; 5] = [
    Block {
        step: "block_1245",
        idx: [0, 1, 3, 4],
        perm: [1, 2, 0, 3],
        printed: [
            ["b22", "b24", "b12", "0"],
            ["b24", "b44", "0", "b45"],
            ["b12", "0", "b11", "0"],
            ["0", "b45", "0", "b55"],
        ],
    },
    Block {
        step: "block_1234",
        idx: [0, 1, 2, 3],
        perm: [1, 0, 3, 2],
        printed: [
            ["b22", "b12", "b24", "0"],
            ["b12", "b11", "0", "b13"],
            ["b24", "0", "b44", "0"],
            ["0", "b13", "0", "b33"],
        ],
    },
    Block {
        step: "block_2345_plain",
        idx: [1, 2, 3, 4],
        perm: [3, 2, 1, 0],
        printed: [
            ["b55", "b45", "b35", "0"],
            ["b45", "b44", "0", "b24"],
            ["b35", "0", "b33", "0"],
            ["0", "b24", "0", "b22"],
        ],
    },
    Block {
        step: "block_2345",
        idx: [1, 2, 3, 4],
        perm: [2, 3, 0, 1],
        printed: [
            ["b44", "b45", "b24", "0"],
            ["b45", "b55", "0", "b35"],
            ["b24", "0", "b22", "0"],
            ["0", "b35", "0", "b33"],
        ],
    },
    Block {
        step: "block_1235",
        idx: [0, 1, 2, 4],
        perm: [0, 2, 1, 3],
        printed: [
            ["b11", "b13", "b12", "0"],
            ["b13", "b33", "0", "b35"],
            ["b12", "0", "b22", "0"],
            ["0", "b35", "0", "b55"],
        ],
    },
];

/// The generic 4x4 block in `x1..x4, y1..y3`.
fn generic_block() -> SymMat {
    parse_matrix(&[&["x1", "y1", "y2", "0"], &["y1", "x2", "0", "y3"], &["y2", "0", "x3", "0"], &["0", "y3", "0", "x4"]])
}

fn block_assignment(m: &SymMat) -> Vec<(&'static str, MultiPoly)> {
    vec![
        ("x1", m[0][0].clone()),
        ("x2", m[1][1].clone()),
        ("x3", m[2][2].clone()),
        ("x4", m[3][3].clone()),
        ("y1", m[0][1].clone()),
        ("y2", m[0][2].clone()),
        ("y3", m[1][3].clone()),
    ]
}

/// Replays every symbolic claim of the pattern's bound chain.
pub fn verify_c_identities() -> Report {
    let e = CExpressions::new();
    let mut r = Report::new("pattern C identities");
    let b = symbolic_c();
    let ok = |text: &str| e.parse(text);

    // Relabellings of the whole matrix.
    let mut m = b.clone();
    let mut orbit = vec![b.clone()];
    for (k, printed) in printed_orbit().iter().enumerate() {
        m = conjugate(&m, &Q_PERM);
        orbit.push(m.clone());
        r.check(
            format!("q_orbit_{}", k + 1),
            format!("Q^{} B Q^-{} equals the printed matrix", k + 1, k + 1),
            same_matrix(&m, printed),
        );
    }
    r.check("q_orbit_closes", "Q^5 B Q^-5 = B", same_matrix(&conjugate(&m, &Q_PERM), &b));
    let pattern = zero_set(&b);
    r.check(
        "q_orbit_pattern",
        "every matrix of the orbit has the zero pattern of B",
        orbit.iter().all(|o| zero_set(o) == pattern),
    );
    let covers = (0..5).all(|entry| {
        (0..5).all(|loc| orbit.iter().any(|o| identity_check(&o[loc][loc], &b[entry][entry])))
    });
    r.check("q_orbit_diagonal_cover", "each diagonal entry reaches each diagonal position", covers);

    let printed_p = parse_matrix(&[
        &["b44", "b24", "b45", "0", "0"],
        &["b24", "b22", "0", "b12", "0"],
        &["b45", "0", "b55", "0", "b35"],
        &["0", "b12", "0", "b11", "b13"],
        &["0", "0", "b35", "b13", "b33"],
    ]);
    let pb = conjugate(&b, &P_PERM);
    r.check("p_conjugation", "P B P^-1 equals the printed matrix", same_matrix(&pb, &printed_p));
    r.check("p_conjugation_pattern", "P B P^-1 has the zero pattern of B", zero_set(&pb) == pattern);

    // Specializations onto the other pattern.
    for (k, zeros) in [(0usize, ["b22", "b55"]), (3, ["b22", "b33"]), (4, ["b11", "b44"])] {
        let claim = format!("Q^{k} B Q^-{k} with {} = {} = 0 is the other pattern with a25 = 0", zeros[0], zeros[1]);
        r.check(format!("h_specialization_{k}"), &claim, specializes_to_h(&orbit[k], &zeros));
    }

    // Generic 4x4 block expansions.
    let g = generic_block();
    let one = MultiPoly::one();
    let half = poly("1/2");
    check_identity(
        &mut r,
        "block_p123_at_one",
        "P_{M[1,2,3]}(1) expansion",
        Ok(char_poly_at(&g, &[0, 1, 2], &one)),
        Ok(e.get("P123_one").clone()),
    );
    check_identity(&mut r, "block_pm_at_one", "P_M(1) expansion", Ok(char_poly_at(&g, &[0, 1, 2, 3], &one)), Ok(e.get("PM_one").clone()));
    check_identity(&mut r, "block_pm_at_half", "P_M(1/2) expansion", Ok(char_poly_at(&g, &[0, 1, 2, 3], &half)), Ok(e.get("PM_half").clone()));
    check_identity(
        &mut r,
        "block_134_radius",
        "(x1 - x3)^2 + (1 - 2x1)(1 - 2x3) = (1 - x1 - x3)^2",
        ok("(x1 - x3)^2 + (1 - 2x1)(1 - 2x3)"),
        ok("(1 - x1 - x3)^2"),
    );

    // Each block used by the bound chain has the generic shape.
    for blk in &BLOCKS {
        let s = sub(&b, &blk.idx);
        let s = conjugate(&s, &blk.perm);
        let printed: SymMat = blk.printed.iter().map(|row| row.iter().map(|t| poly(t)).collect()).collect();
        r.check(
            blk.step,
            format!("the relabelled block on rows {:?} equals the printed matrix", blk.idx.map(|i| i + 1)),
            same_matrix(&s, &printed),
        );
        r.check(
            format!("{}_pattern", blk.step),
            "the block has zeros at (1,4), (2,3), (3,4)",
            [(0, 3), (1, 2), (2, 3)].iter().all(|&(i, j)| s[i][j].is_zero()),
        );
        let asg = block_assignment(&s);
        check_identity(
            &mut r,
            &format!("{}_at_one", blk.step),
            "the block's P(1) matches the generic expansion",
            e.get("PM_one").substitute_all(&asg),
            Ok(char_poly_at(&b, &blk.idx, &one)),
        );
        check_identity(
            &mut r,
            &format!("{}_at_half", blk.step),
            "the block's P(1/2) matches the generic expansion",
            e.get("PM_half").substitute_all(&asg),
            Ok(char_poly_at(&b, &blk.idx, &half)),
        );
    }

    check_identity(
        &mut r,
        "p124_at_one",
        "((1-b11)(1-b22) - b12^2)(1-b44) - (1-b11) b24^2 = P_{B[1,2,4]}(1)",
        ok("(Q12 - b12^2)(1 - b44) - (1 - b11) b24^2"),
        Ok(char_poly_at(&b, &[0, 1, 3], &one)),
    );

    equivalence_steps(&e, &mut r);
    f4_steps(&e, &mut r);
    swap_steps(&mut r);

    check_identity(
        &mut r,
        "h10_derivative_numerator",
        "-2pw(C9 p + C10 w) + a^2(C9 w + 2 C10 p) = C9 (C8-2) w + 2 C10 (C8-1) p with a^2 = C8 - 2x, p^2 = 1 - x, w^2 = 1 - 2x",
        ok("-2 p w (c9 p + c10 w) + (c8 - 2x)(c9 w + 2 c10 p)")
            .map(|t| t.reduce_radical("p", &poly("1 - x")).reduce_radical("w", &poly("1 - 2x"))),
        ok("c9 (c8 - 2) w + 2 c10 (c8 - 1) p"),
    );
    r
}

/// Compares a relabelled matrix with two zero diagonal entries against the
/// symbolic other pattern with `a25 = 0`, after eliminating its leading entry by the trace.
fn specializes_to_h(m: &SymMat, zeros: &[&str; 2]) -> bool {
    let zero_subs: Vec<(&str, MultiPoly)> = zeros.iter().map(|z| (*z, MultiPoly::zero())).collect();
    let Ok(m) = m
        .iter()
        .map(|row| row.iter().map(|e| e.substitute_all(&zero_subs)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
    else {
        return false;
    };
    // Position of each symbol of the other pattern.
    let at = [(2, 2), (3, 3), (0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 4)];
    let subs: Vec<(&str, MultiPoly)> = H_SYMBOLS.iter().zip(at).map(|(name, (i, j))| (*name, m[i][j].clone())).collect();
    let h = symbolic_h();
    let Ok(h) = h
        .iter()
        .map(|row| row.iter().map(|e| e.substitute_all(&subs)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
    else {
        return false;
    };
    if !m[1][4].is_zero() || !m[1][1].is_zero() || !m[4][4].is_zero() {
        return false;
    }
    // The leading entry equals 1/2 minus the other diagonal entries exactly when the trace is 1/2.
    let trace = (0..5).fold(MultiPoly::zero(), |acc, i| acc.add(&m[i][i]));
    let lead_gap = h[0][0].sub(&m[0][0]);
    let trace_gap = poly("1/2").sub(&trace);
    (0..5).all(|i| (0..5).all(|j| (i, j) == (0, 0) || identity_check(&h[i][j], &m[i][j]))) && identity_check(&lead_gap, &trace_gap)
}

/// The two "is equivalent to" steps, with the trace used to eliminate `b11` or `b44`.
fn equivalence_steps(e: &CExpressions, r: &mut Report) {
    let ok = |text: &str| e.parse(text);
    let on_trace = |p: Result<MultiPoly>, var: &str, rest: &str| -> Result<MultiPoly> { p?.substitute(var, &poly(rest)) };

    // b24 lower bound: difference of squared bounds, cleared by D12 (1-2b22)(1-2b33).
    let lhs = ok("(4b12^2 - R12)(4b24^2 - R24)(4b24^2 - (1-2b33)(1-2b55)) \
                  - (1-2b22)(1-2b33)(1-2b55)((1-2b44)(4b12^2 - R12) + 4(1-2b11) b24^2)");
    let rhs = ok("4 b24^2 ((4b12^2 - R12)(4b24^2 - 1 - 2b11 - 4b22 b44 - 4b33 b55) \
                  - (1-2b11)(1-2b22)(1-2b33)(1-2b55))");
    check_identity(
        r,
        "b24_relation_equivalence",
        "squared bounds on b45 compare as the b12/b24 relation when the trace is 1/2",
        on_trace(lhs, "b11", "1/2 - b22 - b33 - b44 - b55"),
        on_trace(rhs, "b11", "1/2 - b22 - b33 - b44 - b55"),
    );
    let lhs = ok("(4b24^2 - R24)(4b12^2 - R12)(4b12^2 - (1-2b55)(1-2b33)) \
                  - (1-2b22)(1-2b55)(1-2b33)((1-2b11)(4b24^2 - R24) + 4(1-2b44) b12^2)");
    let rhs = ok("4 b12^2 ((4b24^2 - R24)(4b12^2 - 1 - 2b44 - 4b11 b22 - 4b33 b55) \
                  - (1-2b44)(1-2b22)(1-2b33)(1-2b55))");
    check_identity(
        r,
        "b12_relation_equivalence",
        "squared bounds on b13 compare as the b24/b12 relation when the trace is 1/2",
        on_trace(lhs, "b44", "1/2 - b11 - b22 - b33 - b55"),
        on_trace(rhs, "b44", "1/2 - b11 - b22 - b33 - b55"),
    );
}

/// The `f4` relation, its derivative, critical point and maximum.
fn f4_steps(e: &CExpressions, r: &mut Report) {
    let ok = |text: &str| e.parse(text);
    // With X = b12^2: squared upper bound minus squared lower bound on b45, cleared.
    let lhs = ok("(Q12 - X)(4X - R12)((1-b55)(1-b44) - 1/4 (1-2b55)(1-2b44)) \
                  - (4X - R12)(1-b55)(1-b11) b24^2 - (Q12 - X)(1-2b55)(1-2b11) b24^2");
    let rhs = ok("(Q12 - X)(4X - R12) f4_numerator - b24^2 (Q15 (4X - R12) + R15 (Q12 - X))");
    check_identity(
        r,
        "f4_relation",
        "the two bounds on b45 combine to b24^2 < f4(b12^2)",
        lhs,
        rhs,
    );
    check_identity(
        r,
        "f4_domain_width",
        "Q12 - R12/4 = (3 - 2b11 - 2b22)/4",
        ok("Q12 - 1/4 R12"),
        ok("1/4 (3 - 2b11 - 2b22)"),
    );
    // Denominator L(X)/W(X) of f4 and its derivative by the quotient rule.
    let w = poly("(qq - X)(4X - rr)");
    let l = poly("a (4X - rr) + c (qq - X)");
    let deriv = l
        .partial("X")
        .and_then(|lp| w.partial("X").map(|wp| lp.mul(&w).sub(&l.mul(&wp))));
    check_identity(
        r,
        "f4_derivative",
        "d/dX (a/(qq - X) + c/(4X - rr)) = a/(qq - X)^2 - 4c/(4X - rr)^2",
        deriv,
        Ok(poly("a (4X - rr)^2 - 4 c (qq - X)^2")),
    );
    // Critical point with formal roots q = sqrt(Q15), s = sqrt(R15).
    let den = poly("4q + 2s");
    let num = poly("q rr + 2 s qq");
    let crit = poly("q").mul(&poly("4").mul(&num).sub(&poly("rr").mul(&den))).sub(
        &poly("2 s").mul(&poly("qq").mul(&den).sub(&num)),
    );
    check_identity(
        r,
        "f4_critical_point",
        "x0 = (q R12 + 2 s Q12)/(4q + 2s) solves q/(Q12 - x0) = 2s/(4 x0 - R12)",
        Ok(crit),
        Ok(MultiPoly::zero()),
    );
    let l_tilde = poly("q^2 (4 xn - rr d) + s^2 (qq d - xn)");
    let w_tilde = poly("(qq d - xn)(4 xn - rr d)");
    let subs = [("xn", num.clone()), ("d", den.clone())];
    let lhs = poly("(4qq - rr) d").mul(&l_tilde).substitute_all(&subs);
    let rhs = poly("(2q + s)^2").mul(&w_tilde).substitute_all(&subs);
    check_identity(
        r,
        "f4_maximum",
        "f4(x0) = (4Q45 - R45)(4Q12 - R12) / (4 (2q + s)^2)",
        lhs,
        rhs,
    );
}

/// Polynomial forms (cleared of radicals and denominators) of the bounds related by symbol swaps.
fn swap_steps(r: &mut Report) {
    const B24_TO_B12: [(&str, &str); 6] = [
        ("b44", "b11"),
        ("b24", "b12"),
        ("b12", "b24"),
        ("b11", "b44"),
        ("b13", "b45"),
        ("b33", "b55"),
    ];
    const B12_TO_B24: [(&str, &str); 6] = [
        ("b11", "b44"),
        ("b12", "b24"),
        ("b24", "b12"),
        ("b44", "b11"),
        ("b45", "b13"),
        ("b55", "b33"),
    ];
    let swap = |text: &str, map: &[(&str, &str)]| -> Result<MultiPoly> {
        let subs: Vec<(&str, MultiPoly)> = map.iter().map(|(a, b)| (*a, MultiPoly::var(b))).collect();
        poly(text).substitute_all(&subs)
    };
    let pairs = [
        ("swap_upper_b24", "(1-b22)(1-b44) - b24^2", "(1-b11)(1-b22) - b12^2"),
        (
            "swap_upper_b13",
            "(1-b33)((1-b11)((1-b22)(1-b44) - b24^2) - (1-b44) b12^2) - b13^2 ((1-b22)(1-b44) - b24^2)",
            "(1-b55)((1-b44)((1-b11)(1-b22) - b12^2) - (1-b11) b24^2) - b45^2 ((1-b11)(1-b22) - b12^2)",
        ),
        ("swap_lower_b24", "4b24^2 - (1-2b22)(1-2b44)", "4b12^2 - (1-2b11)(1-2b22)"),
        (
            "swap_lower_b13",
            "4 b13^2 (4b24^2 - (1-2b22)(1-2b44)) - (1-2b33)((1-2b11)(4b24^2 - (1-2b22)(1-2b44)) + 4(1-2b44) b12^2)",
            "4 b45^2 (4b12^2 - (1-2b11)(1-2b22)) - (1-2b55)((1-2b44)(4b12^2 - (1-2b11)(1-2b22)) + 4(1-2b11) b24^2)",
        ),
    ];
    for (step, from, to) in pairs {
        check_identity(r, step, "the symbol swap carries the b24/b13 premise to the b12/b45 premise", swap(from, &B24_TO_B12), Ok(poly(to)));
    }
    // Conclusion: b24 < sqrt(K) / (2 (2 sqrt(Q) + sqrt(R))) maps to the b12 bound.
    let parts = [
        ("swap_conclusion_k", "(3 - 2b11 - 2b22)(3 - 2b44 - 2b55)", "(3 - 2b11 - 2b33)(3 - 2b22 - 2b44)"),
        ("swap_conclusion_q", "(1-b11)(1-b55)", "(1-b33)(1-b44)"),
        ("swap_conclusion_r", "(1-2b11)(1-2b55)", "(1-2b33)(1-2b44)"),
        ("swap_conclusion_entry", "b24", "b12"),
    ];
    for (step, from, to) in parts {
        check_identity(r, step, "the reverse swap carries the b24 upper bound to the b12 upper bound", swap(from, &B12_TO_B24), Ok(poly(to)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = verify_c_identities();
        assert!(r.all_passed(), "{r}");
        assert!(r.len() >= 30);
    }
}
