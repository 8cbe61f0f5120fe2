//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use sniep_core::exact::rat;
use sniep_core::pattern_c::{verify_appendix_c, verify_appendix_d, verify_c_identities, verify_tables, ExpectedTables};
use sniep_core::pattern_h::{verify_appendix_ab, verify_h_identities};
use sniep_core::report::{Report, Status};
use sniep_core::sniep::{random_feasible_spectrum, realize, sweep_pattern_c, sweep_pattern_h, sweep_random};
use sniep_core::spectral::{example_matrix, verify_example_charpoly_exact, verify_example_matrix_with};

const TABLE_DIGITS: u32 = 2;
const TABLE_BUDGET: Duration = Duration::from_secs(60);
const ROOTS_BUDGET: Duration = Duration::from_secs(10);
const IDENTITY_BUDGET: Duration = Duration::from_secs(5);
const MIN_IDENTITIES: usize = 15;
const ROUND_TRIPS: u64 = 10_000;
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(60);
const MIN_KEPT: u64 = 100_000;
const SWEEP_DRAWS: u64 = 140_000;
const PATTERN_DRAWS: u64 = 20_000;
const SWEEP_BUDGET: Duration = Duration::from_secs(120);
const SEED: u64 = 2024;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(4, |n| n.get())
}

fn failures(r: &Report) -> String {
    r.failures().map(|s| format!("{}: {}", s.step, s.detail.as_deref().unwrap_or(&s.claim))).take(3).collect::<Vec<_>>().join("; ")
}

fn within(elapsed: Duration, budget: Duration) -> (bool, String) {
    // Budgets are calibrated for optimized builds; debug builds only report them.
    let ok = cfg!(debug_assertions) || elapsed <= budget;
    (ok, format!("{:.2}s of {}s", elapsed.as_secs_f64(), budget.as_secs()))
}

fn table_replay() -> (bool, String) {
    let start = Instant::now();
    let v = verify_appendix_d(TABLE_DIGITS);
    let (fast, time) = within(start.elapsed(), TABLE_BUDGET);
    let negative = v.results.iter().filter(|(_, r)| r.p_at_one < rat(0, 1)).count();
    let ok = v.passed() && v.results.len() == 19 && negative == 19 && fast;
    let mut detail = format!("{} sub-ranges, {negative} negative determinants, {time}", v.results.len());
    if let Some(m) = v.first_mismatch() {
        detail.push_str(&format!("; first mismatch {m}"));
    }
    (ok, detail)
}

fn printed_roots() -> (bool, String) {
    let start = Instant::now();
    let r = verify_appendix_ab();
    let (fast, time) = within(start.elapsed(), ROOTS_BUDGET);
    let roots: Vec<_> = r.steps.iter().filter(|s| s.step.ends_with("_roots")).collect();
    let passed = roots.iter().filter(|s| s.status == Status::Pass).count();
    let ok = r.all_passed() && !roots.is_empty() && fast;
    (ok, format!("{passed}/{} root steps, {}/{} steps overall, {time} {}", roots.len(), r.passed(), r.len(), failures(&r)))
}

fn identities() -> (bool, String) {
    let start = Instant::now();
    let mut r = verify_h_identities();
    r.extend(verify_c_identities());
    let (fast, time) = within(start.elapsed(), IDENTITY_BUDGET);
    let ok = r.all_passed() && r.len() >= MIN_IDENTITIES && fast;
    (ok, format!("{}/{} identities, {time} {}", r.passed(), r.len(), failures(&r)))
}

fn counterexample() -> (bool, String) {
    let exact = verify_example_charpoly_exact();
    match verify_example_matrix_with(&example_matrix()) {
        Ok(c) => (
            c.ok && exact,
            format!(
                "deviation {:.1e}, lambda_3 {:.6} vs trace {:.6}, exact charpoly {}",
                c.max_deviation, c.spectrum[2], c.trace, exact
            ),
        ),
        Err(e) => (false, e.to_string()),
    }
}

fn round_trip() -> (bool, String) {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 0..ROUND_TRIPS {
        let s = random_feasible_spectrum(SEED, i);
        match realize(&s) {
            Ok(c) => worst = worst.max(c.residual),
            Err(e) => bad.push(format!("#{i} {s}: {e}")),
        }
    }
    let (fast, time) = within(start.elapsed(), ROUND_TRIP_BUDGET);
    let ok = bad.is_empty() && fast;
    let mut detail = format!("{} failures in {ROUND_TRIPS}, worst residual {worst:.1e}, {time}", bad.len());
    if let Some(first) = bad.first() {
        detail.push_str(&format!("; {first}"));
    }
    (ok, detail)
}

fn sampling() -> (bool, String) {
    let start = Instant::now();
    let j = jobs();
    let run = || -> sniep_core::Result<_> {
        Ok((
            sweep_random(&rat(1, 2), SWEEP_DRAWS, SEED, j)?,
            sweep_pattern_h(PATTERN_DRAWS, SEED, j)?,
            sweep_pattern_c(PATTERN_DRAWS, SEED, j)?,
        ))
    };
    let (g, h, c) = match run() {
        Ok(t) => t,
        Err(e) => return (false, e.to_string()),
    };
    let (fast, time) = within(start.elapsed(), SWEEP_BUDGET);
    let ok = g.kept >= MIN_KEPT && g.violations + h.violations + c.violations == 0 && h.kept > 0 && c.kept > 0 && fast;
    let line = |name: &str, s: &sniep_core::sniep::SweepSummary| {
        format!("{name} {}/{} kept, {} violations, max excess {:.2e}", s.kept, s.sampled, s.violations, s.max_excess)
    };
    (ok, format!("{}; {}; {}; {time}", line("general", &g), line("H", &h), line("C", &c)))
}

fn certificate_c() -> (bool, String) {
    let start = Instant::now();
    let r = verify_appendix_c();
    let swapped = r.steps.iter().filter(|s| s.step.starts_with("swap_")).count();
    let ok = r.all_passed() && swapped > 0;
    (
        ok,
        format!("{}/{} steps, {swapped} under the swap, {:.2}s {}", r.passed(), r.len(), start.elapsed().as_secs_f64(), failures(&r)),
    )
}

fn mutation() -> (bool, String) {
    let start = Instant::now();
    let printed = ExpectedTables::printed();
    let cells = printed.numeric_cells();
    let delta = rat(1, 100);
    let mut missed = Vec::new();
    for cell in &cells {
        let mut t = printed.clone();
        if t.perturb(cell, &delta).is_err() {
            missed.push(format!("{cell} (not perturbable)"));
            continue;
        }
        let v = verify_tables(&t, TABLE_DIGITS);
        if v.passed() || !v.names(cell) {
            missed.push(cell.to_string());
        }
    }
    let ok = missed.is_empty() && !cells.is_empty();
    let mut detail = format!("{}/{} cells caught, {:.2}s", cells.len() - missed.len(), cells.len(), start.elapsed().as_secs_f64());
    if let Some(m) = missed.first() {
        detail.push_str(&format!("; missed {m}"));
    }
    (ok, detail)
}

type Criterion = (&'static str, fn() -> (bool, String));

fn main() {
    let criteria: [Criterion; 8] = [
        ("sub-range table replay", table_replay),
        ("printed roots", printed_roots),
        ("identity suite", identities),
        ("counterexample matrix", counterexample),
        ("solver round trip", round_trip),
        ("third eigenvalue sampling", sampling),
        ("b33/b55 certificate", certificate_c),
        ("table mutation sensitivity", mutation),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        all &= ok;
        println!("{} criterion {} ({name}): {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    if !all {
        std::process::exit(1);
    }
}
