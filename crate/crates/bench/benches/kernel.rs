use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ulrich_core::ci::{self, CIConfig};
use ulrich_core::symfunc::{expand_direct, expand_via_restriction, sample_symmetric};
use ulrich_core::ulrich::{build_a, build_a_twisted, scan_q};
use ulrich_core::Rational;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    group.sample_size(10);
    for s in [4usize, 5, 6] {
        group.bench_with_input(BenchmarkId::new("a_untwisted", s), &s, |b, &s| {
            b.iter(|| build_a(black_box(s), 0).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("a_twisted", s), &s, |b, &s| {
            let beta = Rational::from(-1);
            let gamma = Rational::from(s as i64);
            b.iter(|| build_a_twisted(black_box(s), &beta, &gamma).unwrap())
        });
    }
    group.finish();
}

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("expansion");
    for s in [5usize, 8] {
        let g = sample_symmetric(s, 1, 3).pop().unwrap();
        group
            .bench_with_input(BenchmarkId::new("direct", s), &g, |b, g| b.iter(|| expand_direct(g).unwrap()));
        group.bench_with_input(BenchmarkId::new("restriction", s), &g, |b, g| {
            b.iter(|| expand_via_restriction(g).unwrap())
        });
    }
    group.finish();
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("q_s6_d6", |b| b.iter(|| scan_q(2..=6, black_box(6), &[8, 9]).unwrap()));
    let cfgs: Vec<CIConfig> =
        (4..=8).flat_map(|n| (2..=5).map(move |d| CIConfig::new(n, vec![d, 2], 3).unwrap())).collect();
    group.bench_function("certify_batch", |b| b.iter(|| ci::certify_batch(black_box(&cfgs))));
    group.finish();
}

criterion_group!(benches, construction, expansion, scans);
criterion_main!(benches);
