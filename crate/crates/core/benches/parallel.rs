//! Criterion comparison of the sequential and rayon-parallel suite drivers
//! on the data-parallel property workloads.

use criterion::{criterion_group, criterion_main, Criterion};

use invol_core::{run_suite_with, CorpusParams, ExecMode};

fn bench_params() -> CorpusParams {
    CorpusParams {
        count: 24,
        max_factors: 3,
        max_tri_degree: 3,
        coeff_height: 6,
        seed: 42,
    }
}

fn bench_suites(c: &mut Criterion) {
    for suite in ["parity", "tame", "membership"] {
        let params = bench_params();
        let mut group = c.benchmark_group(suite);
        group.sample_size(10);
        group.bench_function("sequential", |b| {
            b.iter(|| {
                let report = run_suite_with(suite, &params, ExecMode::Sequential).unwrap();
                assert!(report.all_passed());
            })
        });
        group.bench_function("parallel", |b| {
            b.iter(|| {
                let report = run_suite_with(suite, &params, ExecMode::Parallel).unwrap();
                assert!(report.all_passed());
            })
        });
        group.finish();
    }
}

criterion_group!(benches, bench_suites);
criterion_main!(benches);
