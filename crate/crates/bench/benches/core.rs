use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrac_core::geometry::{scheme_halfspaces, DEFAULT_MARGIN_EPS};
use qrac_core::linalg::eigh;
use qrac_core::optimizer::SeeSawConfig;
use qrac_core::random::random_hermitian;
use qrac_core::{evaluate_scheme, realized_patterns, see_saw, standard_scheme};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn evaluate(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate_scheme");
    for name in ["ambainis2", "chuang3", "hinry7"] {
        let scheme = standard_scheme(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &scheme, |b, s| {
            b.iter(|| evaluate_scheme(black_box(s)))
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigh");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for dim in [2, 4, 8] {
        let a = random_hermitian(dim, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &a, |b, a| {
            b.iter(|| eigh(black_box(a)))
        });
    }
    group.finish();
}

fn regions(c: &mut Criterion) {
    let hs = scheme_halfspaces(&standard_scheme("chuang3").unwrap());
    c.bench_function("realized_patterns/chuang3", |b| {
        b.iter(|| realized_patterns(black_box(&hs), 3, DEFAULT_MARGIN_EPS).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let config = SeeSawConfig {
        restarts: 4,
        ..SeeSawConfig::default()
    };
    let mut group = c.benchmark_group("see_saw");
    group.sample_size(10);
    for n in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| see_saw(n, 1, black_box(&config)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, evaluate, eigensolver, regions, search);
criterion_main!(benches);
