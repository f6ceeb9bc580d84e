use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hurwitz_core::hurwitz::{verify_eq2, zeta_hermite, zeta_integral3, zeta_series};
use hurwitz_core::numerics::{bracket_kernel, log_gamma};
use hurwitz_core::{Complex64, Tolerances};

fn evaluators(c: &mut Criterion) {
    let tol = Tolerances::default();
    let mut group = c.benchmark_group("zeta");
    for (label, s) in [
        ("s=2", Complex64::new(2.0, 0.0)),
        ("s=0.5", Complex64::new(0.5, 0.0)),
        ("s=3+4i", Complex64::new(3.0, 4.0)),
    ] {
        group.bench_with_input(BenchmarkId::new("hermite", label), &s, |b, &s| {
            b.iter(|| zeta_hermite(black_box(s), black_box(1.0), &tol).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("integral3", label), &s, |b, &s| {
            b.iter(|| zeta_integral3(black_box(s), black_box(1.0), &tol).unwrap())
        });
    }
    let s = Complex64::new(2.0, 0.0);
    group.bench_function("series/s=2", |b| {
        b.iter(|| zeta_series(black_box(s), black_box(1.0), &tol).unwrap())
    });
    group.finish();
}

fn nested(c: &mut Criterion) {
    let tol = Tolerances::default();
    let s = Complex64::new(2.0, 0.0);
    c.bench_function("verify_eq2/s=2,u=1", |b| {
        b.iter(|| verify_eq2(black_box(s), black_box(1.0), &tol).unwrap())
    });
}

fn kernels(c: &mut Criterion) {
    c.bench_function("bracket_kernel", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for k in 1..=64 {
                acc += bracket_kernel(black_box(k as f64 * 0.0625)).unwrap();
            }
            acc
        })
    });
    let s = Complex64::new(-2.5, 3.0);
    c.bench_function("log_gamma", |b| b.iter(|| log_gamma(black_box(s)).unwrap()));
}

criterion_group!(benches, evaluators, nested, kernels);
criterion_main!(benches);
