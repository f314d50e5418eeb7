use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use modulus_bench::{general, hermitian, psd, DIMS};
use modulus_core::{abs_value, hermitian_eigen, psd_sqrt, psd_sqrt_iterative, TolerancePolicy};

fn eigen(c: &mut Criterion) {
    let pol = TolerancePolicy::default();
    let mut g = c.benchmark_group("hermitian_eigen");
    for n in DIMS {
        let h = hermitian(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| hermitian_eigen(black_box(h), &pol).unwrap())
        });
    }
    g.finish();
}

fn square_roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("psd_sqrt");
    for n in DIMS {
        let p = psd(n);
        g.bench_with_input(BenchmarkId::new("spectral", n), &p, |b, p| {
            b.iter(|| psd_sqrt(black_box(p)))
        });
        g.bench_with_input(BenchmarkId::new("denman_beavers", n), &p, |b, p| {
            b.iter(|| psd_sqrt_iterative(black_box(p)).unwrap())
        });
    }
    g.finish();
}

fn absolute_value(c: &mut Criterion) {
    let pol = TolerancePolicy::default();
    let mut g = c.benchmark_group("abs_value");
    for n in DIMS {
        let a = general(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| abs_value(black_box(a), &pol).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, eigen, square_roots, absolute_value);
criterion_main!(benches);
