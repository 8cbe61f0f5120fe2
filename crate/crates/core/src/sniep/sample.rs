//! Reproducible random matrices and spectra.
//!
//! Sample `index` of seed `seed` depends on nothing else: each index owns a
//! ChaCha stream, so work can be split across threads without changing results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_conditions, SpectrumList, VerdictKind};
use crate::error::Result;
use crate::exact::{rat, to_f64, Rational};
use crate::pattern_c::{build_c, CParams};
use crate::pattern_h::{build_h, HParams};
use crate::spectral::{eigen_jacobi, spectral_radius, SymMatrix, ORACLE_TOL};

/// Slack on `lambda_3 <= trace` in the sampling checks.
pub const THIRD_EIGENVALUE_TOL: f64 = 1e-12;

const DENOM: i64 = 1000;

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn with_off_diagonal(diag: &[f64; 5], off: &[f64; 10], c: f64) -> SymMatrix {
    let mut m = SymMatrix::diag_float(diag);
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            m.set_f64(i, j, c * off[k]);
            k += 1;
        }
    }
    m
}

/// Off-diagonal scale putting the spectral radius at 1, by bisection.
fn unit_radius_scale(diag: &[f64; 5], off: &[f64; 10]) -> Option<f64> {
    let rho = |c: f64| spectral_radius(&with_off_diagonal(diag, off, c)).ok();
    let mut hi = 1.0;
    while rho(hi)? < 1.0 {
        hi *= 2.0;
        if hi > 1e6 {
            return None;
        }
    }
    let mut lo = 0.0;
    for _ in 0..40 {
        let mid = (lo + hi) / 2.0;
        if rho(mid)? < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Sample `index`: a nonnegative symmetric 5x5 matrix with the given trace.
///
/// Entries are zero with fixed probabilities so that sparse patterns occur; one
/// sample in four has its off-diagonal part scaled so that the spectral radius
/// sits just below 1.
pub fn sample_at(trace: &Rational, seed: u64, index: u64) -> SymMatrix {
    let mut rng = rng_for(seed, index);
    let mut diag = [0.0f64; 5];
    for d in diag.iter_mut() {
        if !rng.gen_bool(0.4) {
            *d = rng.gen::<f64>();
        }
    }
    if diag.iter().sum::<f64>() == 0.0 {
        diag[rng.gen_range(0..5)] = 1.0;
    }
    let scale = 10f64.powf(rng.gen_range(-1.3..0.5));
    let mut off = [0.0f64; 10];
    for o in off.iter_mut() {
        if !rng.gen_bool(0.3) {
            *o = scale * rng.gen::<f64>();
        }
    }
    let factor = to_f64(trace) / diag.iter().sum::<f64>();
    diag.iter_mut().for_each(|d| *d *= factor);
    off.iter_mut().for_each(|o| *o *= factor);
    let c = if rng.gen_bool(0.25) && factor > 0.0 { unit_radius_scale(&diag, &off).unwrap_or(1.0) } else { 1.0 };
    with_off_diagonal(&diag, &off, c)
}

/// `count` samples from [`sample_at`].
pub fn sample_random(trace: Rational, count: u64, seed: u64) -> impl Iterator<Item = SymMatrix> {
    (0..count).map(move |i| sample_at(&trace, seed, i))
}

fn draw(rng: &mut ChaCha8Rng, max: i64, zero_prob: f64) -> Rational {
    if rng.gen_bool(zero_prob) {
        rat(0, 1)
    } else {
        rat(rng.gen_range(0..=max), DENOM)
    }
}

/// Random parameters of the pattern with diagonal `(1/2 - t - s, 0, t, s, 0)`.
pub fn sample_h_params(seed: u64, index: u64) -> HParams {
    let mut rng = rng_for(seed, index);
    let half = DENOM / 2;
    let a = rng.gen_range(0..=half);
    let b = rng.gen_range(0..=half - a);
    let (t, s) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let off: [Rational; 6] = std::array::from_fn(|_| draw(&mut rng, 800, 0.1));
    let [a12, a13, a24, a25, a35, a45] = off;
    HParams { t: rat(t, DENOM), s: rat(s, DENOM), a12, a13, a24, a25, a35, a45 }
}

/// Random parameters of the pattern with zeros at (1,4), (1,5), (2,3), (2,5), (3,4) and trace 1/2.
pub fn sample_c_params(seed: u64, index: u64) -> CParams {
    let mut rng = rng_for(seed, index);
    let half = DENOM / 2;
    let mut cuts: [i64; 4] = std::array::from_fn(|_| rng.gen_range(0..=half));
    cuts.sort_unstable();
    let diag = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], cuts[3] - cuts[2], half - cuts[3]];
    let mut v: Vec<Rational> = diag.iter().map(|&d| rat(d, DENOM)).collect();
    v.extend((0..5).map(|_| draw(&mut rng, 800, 0.1)));
    CParams::from_array(v.try_into().expect("ten values"))
}

/// A random spectrum that passes [`check_conditions`], by rejection.
///
/// Values sit on a grid of step `1/1000` scaled by a random factor; zeros and
/// repeated values are drawn on purpose.
pub fn random_feasible_spectrum(seed: u64, index: u64) -> SpectrumList {
    let mut rng = rng_for(seed, index);
    loop {
        let mut v = vec![rat(1, 1)];
        for _ in 0..4 {
            let x = match rng.gen_range(0..10) {
                0 => rat(0, 1),
                1 => v[rng.gen_range(0..v.len())].clone(),
                2 => -v[rng.gen_range(0..v.len())].clone(),
                _ => rat(rng.gen_range(-DENOM..=DENOM), DENOM),
            };
            v.push(x);
        }
        let k = rat(rng.gen_range(1..=20), 4);
        let v: Vec<Rational> = v.iter().map(|x| x * &k).collect();
        let s = SpectrumList::new(&v).expect("five values");
        if check_conditions(&s).kind == VerdictKind::Realizable {
            return s;
        }
    }
}

/// Outcome of a sampling sweep of `lambda_3 <= trace`.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct SweepSummary {
    pub sampled: u64,
    /// Samples with spectral radius at most 1.
    pub kept: u64,
    pub violations: u64,
    /// Largest `lambda_3 - trace` over kept samples.
    pub max_excess: f64,
    pub first_violation: Option<u64>,
}

impl SweepSummary {
    fn merge(mut self, other: Self) -> Self {
        self.sampled += other.sampled;
        self.kept += other.kept;
        self.violations += other.violations;
        self.max_excess = self.max_excess.max(other.max_excess);
        self.first_violation = self.first_violation.or(other.first_violation);
        self
    }
}

fn sweep_range<F>(lo: u64, hi: u64, make: &F) -> Result<SweepSummary>
where
    F: Fn(u64) -> Result<SymMatrix>,
{
    let mut out = SweepSummary { max_excess: f64::NEG_INFINITY, ..Default::default() };
    for index in lo..hi {
        let m = make(index)?;
        out.sampled += 1;
        let spec = eigen_jacobi(&m, ORACLE_TOL)?;
        if spec.spectral_radius() > 1.0 {
            continue;
        }
        out.kept += 1;
        let excess = spec.values[2] - m.trace_f64();
        out.max_excess = out.max_excess.max(excess);
        if excess > THIRD_EIGENVALUE_TOL {
            out.violations += 1;
            out.first_violation.get_or_insert(index);
        }
    }
    Ok(out)
}

/// Checks `lambda_3 <= trace + tol` over samples `0..count` with spectral radius at most 1.
///
/// Indices are split into `jobs` contiguous blocks run on scoped threads and
/// merged in index order, so the summary does not depend on `jobs`.
pub fn sweep<F>(count: u64, jobs: usize, make: F) -> Result<SweepSummary>
where
    F: Fn(u64) -> Result<SymMatrix> + Sync,
{
    let jobs = jobs.clamp(1, 256) as u64;
    let chunk = count.div_ceil(jobs).max(1);
    let parts: Vec<Result<SweepSummary>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let (lo, hi) = ((j * chunk).min(count), ((j + 1) * chunk).min(count));
                let make = &make;
                scope.spawn(move || sweep_range(lo, hi, make))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut total = SweepSummary { max_excess: f64::NEG_INFINITY, ..Default::default() };
    for p in parts {
        total = total.merge(p?);
    }
    Ok(total)
}

/// Sweep over general nonnegative symmetric samples with the given trace.
pub fn sweep_random(trace: &Rational, count: u64, seed: u64, jobs: usize) -> Result<SweepSummary> {
    sweep(count, jobs, |i| Ok(sample_at(trace, seed, i)))
}

/// Sweep over samples of the pattern with diagonal `(1/2 - t - s, 0, t, s, 0)`.
pub fn sweep_pattern_h(count: u64, seed: u64, jobs: usize) -> Result<SweepSummary> {
    sweep(count, jobs, |i| Ok(build_h(&sample_h_params(seed, i))?.to_float()))
}

/// Sweep over samples of the pattern with five off-diagonal zeros and trace 1/2.
pub fn sweep_pattern_c(count: u64, seed: u64, jobs: usize) -> Result<SweepSummary> {
    sweep(count, jobs, |i| Ok(build_c(&sample_c_params(seed, i))?.to_float()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_is_forced() {
        let m = sample_at(&rat(1, 2), 42, 0);
        assert!((m.trace_f64() - 0.5).abs() < 1e-12);
        assert!(m.min_entry() >= 0.0);
    }

    #[test]
    fn streams_are_deterministic() {
        let a: Vec<_> = sample_random(rat(1, 2), 5, 7).collect();
        let b: Vec<_> = sample_random(rat(1, 2), 5, 7).collect();
        assert_eq!(a, b);
        assert_eq!(sample_at(&rat(1, 2), 7, 3), a[3]);
    }

    #[test]
    fn sweep_is_independent_of_jobs() {
        let one = sweep_random(&rat(1, 2), 300, 9, 1).unwrap();
        let four = sweep_random(&rat(1, 2), 300, 9, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.violations, 0);
        assert!(one.kept > 0);
    }

    #[test]
    fn pattern_samples_are_valid() {
        for i in 0..50 {
            assert!(sample_h_params(1, i).validate().is_ok());
            assert!(sample_c_params(1, i).validate().is_ok());
        }
    }

    #[test]
    fn feasible_spectra_pass() {
        for i in 0..50 {
            let s = random_feasible_spectrum(3, i);
            assert_eq!(check_conditions(&s).kind, VerdictKind::Realizable);
        }
    }
}
