//! Expected sub-range tables, their comparison against the pipeline, and emitters.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::bounds::{case_domain, given_labels, run_subrange, PipelineResult, Selection};
use super::table_data::TABLE_ROWS;
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, parse_surd_square, rat, Rational};
use crate::report::Report;

/// One printed row across all six tables of a case.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub case: u8,
    pub subrange: u8,
    /// Flattened `lo, hi` pairs of the given ranges.
    pub given: &'static [&'static str],
    pub lower_diag: [&'static str; 5],
    pub upper_diag: [&'static str; 5],
    /// `r12, r12~, M12~, r24, r24~, M24~`.
    pub intermediates: [&'static str; 6],
    /// `m12, m13, m24, m35^13, m35^45, m45`.
    pub offdiag: [&'static str; 6],
    pub p_at_one: &'static str,
}

/// The six tables printed per case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    SubRanges,
    LowerDiag,
    UpperDiag,
    Intermediates,
    OffDiag,
    PAtOne,
}

impl TableKind {
    pub const ALL: [TableKind; 6] = [
        TableKind::SubRanges,
        TableKind::LowerDiag,
        TableKind::UpperDiag,
        TableKind::Intermediates,
        TableKind::OffDiag,
        TableKind::PAtOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::SubRanges => "sub-ranges",
            TableKind::LowerDiag => "m_ii",
            TableKind::UpperDiag => "M_ii",
            TableKind::Intermediates => "intermediates",
            TableKind::OffDiag => "m_ij",
            TableKind::PAtOne => "P_Bmin(1)",
        }
    }

    /// Column headers in printed order; the sub-range headers depend on the case.
    pub fn columns(self, case: u8) -> Vec<String> {
        let v = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        match self {
            TableKind::SubRanges => given_labels(case)
                .iter()
                .flat_map(|l| [format!("{l} lower"), format!("{l} upper")])
                .collect(),
            TableKind::LowerDiag => v(&["m11", "m22", "m33", "m44", "m55"]),
            TableKind::UpperDiag => v(&["M11", "M22", "M33", "M44", "M55"]),
            TableKind::Intermediates => v(&["r12", "r12~", "M12~", "r24", "r24~", "M24~"]),
            TableKind::OffDiag => v(&["m12", "m13", "m24", "m35^13", "m35^45", "m45"]),
            TableKind::PAtOne => v(&["P_Bmin(1)"]),
        }
    }
}

/// Address of one cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellRef {
    pub case: u8,
    pub subrange: u8,
    pub table: TableKind,
    pub column: String,
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} sub-range {}, table {}, column {}", self.case, self.subrange, self.table.name(), self.column)
    }
}

/// Value of a cell. Square-root cells hold the exact square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellValue {
    Number(Rational),
    Square(Rational),
    /// Whether the `*` mark is present.
    Mark(bool),
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellValue::Number(x) => f.write_str(&format_rational(x)),
            CellValue::Square(x) => f.write_str(&format_surd(x)),
            CellValue::Mark(true) => f.write_str("*"),
            CellValue::Mark(false) => f.write_str("(no mark)"),
        }
    }
}

/// Column suffix for the value a relation improved on.
pub const BEFORE: &str = " (before relations)";
/// Column suffix for the selection mark.
pub const MARK: &str = " mark";

fn parse_offdiag_cell(text: &str) -> Result<(Rational, Option<Rational>, bool)> {
    let mut s = text.trim();
    let marked = s.ends_with('*');
    if marked {
        s = s.trim_end_matches('*').trim();
    }
    match s.split_once('(') {
        Some((v, rest)) => {
            let pre = rest.trim_end().strip_suffix(')').ok_or_else(|| Error::Format(format!("bad cell {text:?}")))?;
            Ok((parse_rational(v)?, Some(parse_rational(pre)?), marked))
        }
        None => Ok((parse_rational(s)?, None, marked)),
    }
}

/// Parsed expectations for every row, keyed by cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedTables {
    rows: Vec<(u8, u8)>,
    cells: BTreeMap<CellRef, CellValue>,
}

impl ExpectedTables {
    /// The tables as printed.
    pub fn printed() -> Self {
        Self::from_rows(&TABLE_ROWS).expect("embedded tables parse")
    }

    pub fn from_rows(rows: &[TableRow]) -> Result<Self> {
        let mut cells = BTreeMap::new();
        let mut keys = Vec::new();
        for row in rows {
            keys.push((row.case, row.subrange));
            let at = |table: TableKind, column: &str| CellRef {
                case: row.case,
                subrange: row.subrange,
                table,
                column: column.to_string(),
            };
            let sub_cols = TableKind::SubRanges.columns(row.case);
            if sub_cols.len() != row.given.len() {
                return Err(Error::Format(format!("case {} row {} has wrong sub-range arity", row.case, row.subrange)));
            }
            for (c, t) in sub_cols.iter().zip(row.given) {
                cells.insert(at(TableKind::SubRanges, c), CellValue::Number(parse_rational(t)?));
            }
            for (c, t) in TableKind::LowerDiag.columns(row.case).iter().zip(&row.lower_diag) {
                cells.insert(at(TableKind::LowerDiag, c), CellValue::Number(parse_rational(t)?));
            }
            for (c, t) in TableKind::UpperDiag.columns(row.case).iter().zip(&row.upper_diag) {
                cells.insert(at(TableKind::UpperDiag, c), CellValue::Number(parse_rational(t)?));
            }
            for (k, (c, t)) in TableKind::Intermediates.columns(row.case).iter().zip(&row.intermediates).enumerate() {
                let v = if k % 3 == 2 {
                    CellValue::Square(parse_surd_square(t)?)
                } else {
                    CellValue::Number(parse_rational(t)?)
                };
                cells.insert(at(TableKind::Intermediates, c), v);
            }
            for (c, t) in TableKind::OffDiag.columns(row.case).iter().zip(&row.offdiag) {
                let (v, pre, marked) = parse_offdiag_cell(t)?;
                cells.insert(at(TableKind::OffDiag, c), CellValue::Number(v));
                if let Some(p) = pre {
                    cells.insert(at(TableKind::OffDiag, &format!("{c}{BEFORE}")), CellValue::Number(p));
                }
                if c.starts_with("m35") {
                    cells.insert(at(TableKind::OffDiag, &format!("{c}{MARK}")), CellValue::Mark(marked));
                }
            }
            cells.insert(at(TableKind::PAtOne, "P_Bmin(1)"), CellValue::Number(parse_rational(row.p_at_one)?));
        }
        Ok(Self { rows: keys, cells })
    }

    pub fn rows(&self) -> &[(u8, u8)] {
        &self.rows
    }

    pub fn cells(&self) -> impl Iterator<Item = (&CellRef, &CellValue)> {
        self.cells.iter()
    }

    /// Cells holding a number or square that a perturbation can shift.
    pub fn numeric_cells(&self) -> Vec<CellRef> {
        self.cells
            .iter()
            .filter(|(_, v)| !matches!(v, CellValue::Mark(_)))
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn get(&self, at: &CellRef) -> Option<&CellValue> {
        self.cells.get(at)
    }

    /// Adds `delta` to a numeric cell (to the square for square-root cells).
    pub fn perturb(&mut self, at: &CellRef, delta: &Rational) -> Result<()> {
        match self.cells.get_mut(at) {
            Some(CellValue::Number(x)) | Some(CellValue::Square(x)) => {
                *x += delta;
                Ok(())
            }
            Some(CellValue::Mark(m)) => {
                *m = !*m;
                Ok(())
            }
            None => Err(Error::Input(format!("no such cell: {at}"))),
        }
    }

    /// Given ranges of one row, read from its sub-range cells.
    pub fn given(&self, case: u8, subrange: u8) -> Result<Vec<(Rational, Rational)>> {
        let cols = TableKind::SubRanges.columns(case);
        let mut vals = Vec::new();
        for c in &cols {
            let at = CellRef { case, subrange, table: TableKind::SubRanges, column: c.clone() };
            match self.cells.get(&at) {
                Some(CellValue::Number(x)) => vals.push(x.clone()),
                _ => return Err(Error::Input(format!("missing cell {at}"))),
            }
        }
        Ok(vals.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect())
    }
}

/// All cells a pipeline run produces, keyed like [`ExpectedTables`].
pub fn computed_cells(subrange: u8, res: &PipelineResult) -> BTreeMap<CellRef, CellValue> {
    let case = res.case;
    let at = |table: TableKind, column: &str| CellRef { case, subrange, table, column: column.to_string() };
    let mut out = BTreeMap::new();
    let n = |x: &Rational| CellValue::Number(x.clone());
    for (c, (lo, hi)) in given_labels(case).iter().zip(&res.given) {
        out.insert(at(TableKind::SubRanges, &format!("{c} lower")), n(lo));
        out.insert(at(TableKind::SubRanges, &format!("{c} upper")), n(hi));
    }
    for (i, c) in TableKind::LowerDiag.columns(case).iter().enumerate() {
        out.insert(at(TableKind::LowerDiag, c), n(&res.bounds.lower[i]));
    }
    for (i, c) in TableKind::UpperDiag.columns(case).iter().enumerate() {
        out.insert(at(TableKind::UpperDiag, c), n(&res.bounds.upper[i]));
    }
    let ch = &res.chain;
    let inter = [
        n(&ch.r12),
        n(&ch.r12_tilde),
        CellValue::Square(ch.mt12_sq.clone()),
        n(&ch.r24),
        n(&ch.r24_tilde),
        CellValue::Square(ch.mt24_sq.clone()),
    ];
    for (c, v) in TableKind::Intermediates.columns(case).iter().zip(inter) {
        out.insert(at(TableKind::Intermediates, c), v);
    }
    let imp = &res.improved;
    let raw = &ch.raw;
    let pairs: [(&str, &Rational, &Rational); 6] = [
        ("m12", &imp.m12, &raw.m12),
        ("m13", &imp.m13, &raw.m13),
        ("m24", &imp.m24, &raw.m24),
        ("m35^13", &raw.m35_13, &raw.m35_13),
        ("m35^45", &raw.m35_45, &raw.m35_45),
        ("m45", &imp.m45, &raw.m45),
    ];
    for (c, value, before) in pairs {
        out.insert(at(TableKind::OffDiag, c), n(value));
        if value != before {
            out.insert(at(TableKind::OffDiag, &format!("{c}{BEFORE}")), n(before));
        }
    }
    let (mark13, mark45) = match imp.selection {
        Selection::From13 => (true, false),
        Selection::From45 => (false, true),
        Selection::Tie => (true, true),
    };
    out.insert(at(TableKind::OffDiag, &format!("m35^13{MARK}")), CellValue::Mark(mark13));
    out.insert(at(TableKind::OffDiag, &format!("m35^45{MARK}")), CellValue::Mark(mark45));
    out.insert(at(TableKind::PAtOne, "P_Bmin(1)"), n(&res.p_at_one));
    out
}

/// One disagreement between a table and the computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub cell: CellRef,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, computed {}", self.cell, self.expected, self.actual)
    }
}

/// Outcome of replaying every sub-range.
#[derive(Debug, Clone)]
pub struct TableVerification {
    pub report: Report,
    pub mismatches: Vec<Mismatch>,
    pub results: Vec<(u8, PipelineResult)>,
}

impl TableVerification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.report.all_passed()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }

    pub fn names(&self, cell: &CellRef) -> bool {
        self.mismatches.iter().any(|m| &m.cell == cell)
    }
}

/// Checks that each case's sub-ranges tile its domain: every endpoint is either a
/// domain endpoint or meets a neighbouring sub-range, and the measures add up.
fn check_partition(expected: &ExpectedTables, case: u8, mismatches: &mut Vec<Mismatch>, report: &mut Report) {
    let domain = case_domain(case);
    let labels = given_labels(case);
    let rows: Vec<u8> = expected.rows().iter().filter(|(c, _)| *c == case).map(|(_, s)| *s).collect();
    let boxes: Vec<(u8, Vec<(Rational, Rational)>)> =
        rows.iter().filter_map(|&s| expected.given(case, s).ok().map(|g| (s, g))).collect();
    let overlaps = |a: &(Rational, Rational), b: &(Rational, Rational)| a.0.clone().max(b.0.clone()) < a.1.clone().min(b.1.clone());
    let mut ok = true;
    for (s, g) in &boxes {
        for axis in 0..g.len() {
            let others_touch = |pick_hi: bool| {
                boxes.iter().any(|(t, h)| {
                    t != s
                        && (if pick_hi { h[axis].1 == g[axis].0 } else { h[axis].0 == g[axis].1 })
                        && (0..g.len()).filter(|&k| k != axis).all(|k| overlaps(&g[k], &h[k]))
                })
            };
            let lo_ok = g[axis].0 >= domain[axis].0 && (g[axis].0 == domain[axis].0 || others_touch(true));
            let hi_ok = g[axis].1 <= domain[axis].1 && (g[axis].1 == domain[axis].1 || others_touch(false));
            for (good, side, value) in [(lo_ok, "lower", &g[axis].0), (hi_ok, "upper", &g[axis].1)] {
                if !good {
                    ok = false;
                    mismatches.push(Mismatch {
                        cell: CellRef {
                            case,
                            subrange: *s,
                            table: TableKind::SubRanges,
                            column: format!("{} {side}", labels[axis]),
                        },
                        expected: "an endpoint shared with the domain or an adjacent sub-range".into(),
                        actual: format_rational(value),
                    });
                }
            }
        }
    }
    let measure = |g: &[(Rational, Rational)]| g.iter().fold(Rational::one(), |acc, (lo, hi)| acc * (hi - lo));
    let total: Rational = boxes.iter().map(|(_, g)| measure(g)).sum();
    let whole = measure(&domain);
    if total != whole {
        ok = false;
        mismatches.push(Mismatch {
            cell: CellRef { case, subrange: 0, table: TableKind::SubRanges, column: "coverage".into() },
            expected: format_rational(&whole),
            actual: format_rational(&total),
        });
    }
    report.check(format!("case {case} sub-ranges"), "sub-ranges tile the case's domain", ok);
}

/// Replays every row of `expected` at `digits` decimal places.
pub fn verify_tables(expected: &ExpectedTables, digits: u32) -> TableVerification {
    let mut report = Report::new("sub-range tables");
    let mut mismatches = Vec::new();
    let mut results = Vec::new();
    for case in 1..=4u8 {
        check_partition(expected, case, &mut mismatches, &mut report);
    }
    for &(case, sub) in expected.rows() {
        let step = format!("case {case} sub-range {sub}");
        let res = expected.given(case, sub).and_then(|g| run_subrange(case, &g, digits));
        let res = match res {
            Ok(r) => r,
            Err(e) => {
                mismatches.push(Mismatch {
                    cell: CellRef { case, subrange: sub, table: TableKind::SubRanges, column: "pipeline".into() },
                    expected: "a completed pipeline".into(),
                    actual: e.to_string(),
                });
                report.fail(step, "pipeline runs", e.to_string());
                continue;
            }
        };
        let computed = computed_cells(sub, &res);
        let mut row_mismatches = Vec::new();
        let keys: std::collections::BTreeSet<&CellRef> = expected
            .cells()
            .map(|(k, _)| k)
            .filter(|k| k.case == case && k.subrange == sub && k.table != TableKind::SubRanges)
            .chain(computed.keys().filter(|k| k.table != TableKind::SubRanges))
            .collect();
        for k in keys {
            let e = expected.get(k);
            let a = computed.get(k);
            if e != a {
                row_mismatches.push(Mismatch {
                    cell: k.clone(),
                    expected: e.map_or("(absent)".into(), |v| v.to_string()),
                    actual: a.map_or("(absent)".into(), |v| v.to_string()),
                });
            }
        }
        let cells_ok = row_mismatches.is_empty();
        let detail = row_mismatches.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; ");
        report.check_with(&step, "every printed cell equals the recomputed value", cells_ok, || detail);
        report.check_with(
            &step,
            format!("P_Bmin(1) = {} < 0", format_rational(&res.p_at_one)),
            res.p_at_one.is_negative(),
            || "determinant is not negative".into(),
        );
        mismatches.extend(row_mismatches);
        results.push((sub, res));
    }
    TableVerification { report, mismatches, results }
}

/// Replays the printed tables.
pub fn verify_appendix_d(digits: u32) -> TableVerification {
    verify_tables(&ExpectedTables::printed(), digits)
}

/// Largest `k` with `k^2 | n`, and `n / k^2`.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            k *= &p;
        }
        while (&rest % &p).is_zero() && (&rest / &p % &p).is_zero() {
            rest /= &pp;
            k *= &p;
        }
        p += 1;
    }
    (k, rest)
}

/// `sqrt(x)` written as `k√m/d` with `m` square-free and `k/d` in lowest terms.
pub fn format_surd(square: &Rational) -> String {
    if square.is_negative() {
        return format!("sqrt({})", format_rational(square));
    }
    if square.is_zero() {
        return "0".into();
    }
    let (p, q) = (square.numer(), square.denom());
    let (k, m) = split_square(&(p * q));
    let g = k.gcd(q);
    let (k, d) = (k / &g, q / &g);
    if m.is_one() {
        return format_rational(&Rational::new(k, d));
    }
    let mut s = String::new();
    if !k.is_one() {
        s.push_str(&k.to_string());
    }
    s.push('√');
    s.push_str(&m.to_string());
    if !d.is_one() {
        s.push('/');
        s.push_str(&d.to_string());
    }
    s
}

fn offdiag_texts(res: &PipelineResult) -> [String; 6] {
    let imp = &res.improved;
    let raw = &res.chain.raw;
    let cell = |v: &Rational, before: &Rational| {
        if v == before {
            format_rational(v)
        } else {
            format!("{} ({})", format_rational(v), format_rational(before))
        }
    };
    let mark = |on: bool| if on { " *" } else { "" };
    let (m13, m45) = match imp.selection {
        Selection::From13 => (true, false),
        Selection::From45 => (false, true),
        Selection::Tie => (true, true),
    };
    [
        cell(&imp.m12, &raw.m12),
        cell(&imp.m13, &raw.m13),
        cell(&imp.m24, &raw.m24),
        format!("{}{}", format_rational(&raw.m35_13), mark(m13)),
        format!("{}{}", format_rational(&raw.m35_45), mark(m45)),
        cell(&imp.m45, &raw.m45),
    ]
}

/// Printed-notation text of every cell of one row, table by table.
pub fn row_texts(res: &PipelineResult) -> Vec<(TableKind, Vec<String>)> {
    let f = format_rational;
    let ch = &res.chain;
    vec![
        (TableKind::SubRanges, res.given.iter().flat_map(|(a, b)| [f(a), f(b)]).collect()),
        (TableKind::LowerDiag, res.bounds.lower.iter().map(f).collect()),
        (TableKind::UpperDiag, res.bounds.upper.iter().map(f).collect()),
        (
            TableKind::Intermediates,
            vec![f(&ch.r12), f(&ch.r12_tilde), format_surd(&ch.mt12_sq), f(&ch.r24), f(&ch.r24_tilde), format_surd(&ch.mt24_sq)],
        ),
        (TableKind::OffDiag, offdiag_texts(res).to_vec()),
        (TableKind::PAtOne, vec![f(&res.p_at_one)]),
    ]
}

/// Serializable form of one reproduced row.
#[derive(Debug, Clone, Serialize)]
pub struct RowJson {
    pub case: u8,
    pub subrange: u8,
    pub tables: BTreeMap<&'static str, BTreeMap<String, String>>,
}

pub fn rows_json(results: &[(u8, PipelineResult)]) -> Vec<RowJson> {
    results
        .iter()
        .map(|(sub, res)| {
            let tables = row_texts(res)
                .into_iter()
                .map(|(kind, texts)| {
                    let cols = kind.columns(res.case);
                    (kind.name(), cols.into_iter().zip(texts).collect())
                })
                .collect();
            RowJson { case: res.case, subrange: *sub, tables }
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV block per (case, table), in printed order, separated by blank lines.
pub fn render_csv(results: &[(u8, PipelineResult)]) -> String {
    let mut blocks = Vec::new();
    for case in 1..=4u8 {
        let rows: Vec<&(u8, PipelineResult)> = results.iter().filter(|(_, r)| r.case == case).collect();
        if rows.is_empty() {
            continue;
        }
        for kind in TableKind::ALL {
            let mut lines = vec![format!(
                "table,case,sub-range,{}",
                kind.columns(case).iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")
            )];
            for (sub, res) in &rows {
                let texts = row_texts(res).into_iter().find(|(k, _)| *k == kind).map(|(_, t)| t).unwrap_or_default();
                lines.push(format!(
                    "{},{case},{sub},{}",
                    csv_field(kind.name()),
                    texts.iter().map(|t| csv_field(t)).collect::<Vec<_>>().join(",")
                ));
            }
            blocks.push(lines.join("\n"));
        }
    }
    blocks.join("\n\n") + "\n"
}

/// Plain-text rendering of the reproduced tables.
pub fn render_text(results: &[(u8, PipelineResult)]) -> String {
    let mut out = String::new();
    for case in 1..=4u8 {
        let rows: Vec<&(u8, PipelineResult)> = results.iter().filter(|(_, r)| r.case == case).collect();
        if rows.is_empty() {
            continue;
        }
        for kind in TableKind::ALL {
            out.push_str(&format!("Case {case} {}\n", kind.name()));
            out.push_str(&format!("  sub-range | {}\n", kind.columns(case).join(" | ")));
            for (sub, res) in &rows {
                let texts = row_texts(res).into_iter().find(|(k, _)| *k == kind).map(|(_, t)| t).unwrap_or_default();
                out.push_str(&format!("  {sub} | {}\n", texts.join(" | ")));
            }
            out.push('\n');
        }
    }
    out
}

/// The printed text of every cell, table by table, for one row.
pub fn printed_texts(row: &TableRow) -> Vec<(TableKind, Vec<String>)> {
    let v = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        (TableKind::SubRanges, row.given.iter().map(|s| format_rational(&parse_rational(s).unwrap_or_else(|_| rat(0, 1)))).collect()),
        (TableKind::LowerDiag, v(&row.lower_diag)),
        (TableKind::UpperDiag, v(&row.upper_diag)),
        (TableKind::Intermediates, v(&row.intermediates)),
        (TableKind::OffDiag, v(&row.offdiag)),
        (TableKind::PAtOne, vec![row.p_at_one.to_string()]),
    ]
}

/// The printed rows.
pub fn printed_rows() -> &'static [TableRow] {
    &TABLE_ROWS
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_text() {
        assert_eq!(format_surd(&rat(130, 437)), "√56810/437");
        assert_eq!(format_surd(&rat(1809, 6230)), "3√1252230/6230");
        assert_eq!(format_surd(&rat(169, 484)), "13/22");
        assert_eq!(format_surd(&rat(11, 32)), "√22/8");
        assert_eq!(format_surd(&rat(4624, 14867)), "68√14867/14867");
    }

    #[test]
    fn cell_parsing() {
        assert_eq!(parse_offdiag_cell("53/100 (1/2)").unwrap(), (rat(53, 100), Some(rat(1, 2)), false));
        assert_eq!(parse_offdiag_cell("47/100 *").unwrap(), (rat(47, 100), None, true));
        assert!(parse_offdiag_cell("1/2 (3/4").is_err());
    }
}
