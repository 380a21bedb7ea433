use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nearirr_bench::{poly, CHECK_INPUTS, GCD_INPUTS, PAIR_INPUTS};
use nearirr_core::algebra::bivar_gcd;
use nearirr_core::check_nearly_irreducible;
use nearirr_core::oracle::intersection_sum;
use std::hint::black_box;

fn check(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_nearly_irreducible");
    for (name, src) in CHECK_INPUTS {
        let f = poly(src);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| check_nearly_irreducible(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn intersections(c: &mut Criterion) {
    let mut group = c.benchmark_group("intersection_sum");
    for (name, a, b) in PAIR_INPUTS {
        let (f, g) = (poly(a), poly(b));
        group.bench_function(*name, |bench| {
            bench.iter(|| intersection_sum(black_box(&f), black_box(&g)).unwrap())
        });
    }
    group.finish();
}

fn gcd(c: &mut Criterion) {
    let mut group = c.benchmark_group("bivar_gcd");
    for (name, a, b) in GCD_INPUTS {
        let (f, g) = (poly(a), poly(b));
        group.bench_function(*name, |bench| {
            bench.iter(|| bivar_gcd(black_box(&f), black_box(&g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, check, intersections, gcd);
criterion_main!(benches);
