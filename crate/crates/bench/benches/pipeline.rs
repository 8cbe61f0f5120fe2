//! Timings for the exact kernels and the end-to-end replays.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sniep_core::exact::{rat, sqrt_lower_bound};
use sniep_core::pattern_c::{bounds::run_subrange, verify_appendix_c_with, verify_appendix_d, ExpectedTables};
use sniep_core::pattern_h::verify_appendix_ab;
use sniep_core::poly::isolate_real_roots;
use sniep_core::sniep::{decide, random_feasible_spectrum, sample_at, SpectrumList};
use sniep_core::spectral::{charpoly_exact, eigen_jacobi, example_matrix, ORACLE_TOL};
use sniep_core::UniPoly;

fn kernels(c: &mut Criterion) {
    let x = rat(130, 625);
    c.bench_function("sqrt_lower_bound 10 digits", |b| b.iter(|| sqrt_lower_bound(black_box(&x), 10).unwrap()));

    let cubic = UniPoly::new(vec![rat(-3, 1), rat(78, 1), rat(12, 1), rat(-24, 1)]);
    c.bench_function("isolate cubic roots 10 digits", |b| b.iter(|| isolate_real_roots(black_box(&cubic), 10).unwrap()));

    let m = example_matrix();
    c.bench_function("jacobi 5x5", |b| b.iter(|| eigen_jacobi(black_box(&m), ORACLE_TOL).unwrap()));

    let tables = ExpectedTables::printed();
    let given = tables.given(1, 1).unwrap();
    let bmin = run_subrange(1, &given, 2).unwrap().bmin;
    c.bench_function("exact charpoly 5x5", |b| b.iter(|| charpoly_exact(black_box(&bmin)).unwrap()));
    c.bench_function("sub-range pipeline", |b| b.iter(|| run_subrange(1, black_box(&given), 2).unwrap()));
}

fn solver(c: &mut Criterion) {
    let s = SpectrumList::parse("3/2 1 1/4 -1 -1/2").unwrap();
    c.bench_function("decide with certificate", |b| b.iter(|| decide(black_box(&s)).unwrap()));
    c.bench_function("random feasible spectrum", |b| {
        let mut i = 0;
        b.iter(|| {
            i += 1;
            random_feasible_spectrum(1, i)
        })
    });
    let half = rat(1, 2);
    c.bench_function("sample matrix", |b| {
        let mut i = 0;
        b.iter(|| {
            i += 1;
            sample_at(&half, 1, i)
        })
    });
}

fn replays(c: &mut Criterion) {
    let mut g = c.benchmark_group("replay");
    g.sample_size(10);
    g.bench_function("table replay", |b| b.iter(|| verify_appendix_d(2)));
    g.bench_function("roots of g2 certificates", |b| b.iter(verify_appendix_ab));
    g.bench_function("b33/b55 certificate, 1000 grid points", |b| b.iter(|| verify_appendix_c_with(1000, 1)));
    g.finish();
}

criterion_group!(benches, kernels, solver, replays);
criterion_main!(benches);
