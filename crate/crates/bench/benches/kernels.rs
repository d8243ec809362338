use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kspectra::datasets::karate;
use kspectra::metrics::cycle_counts;
use kspectra::{apply_k, coreness, peel, spectral_radius_k, SpectralConfig};
use kspectra_bench::{probe_vector, sparse_gnp};

fn tensor_apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("apply_k");
    for n in [1_000, 20_000] {
        let g = sparse_gnp(n, 12.0);
        let x = probe_vector(n);
        for k in [2, 4] {
            group.bench_with_input(BenchmarkId::new(format!("k{k}"), n), &k, |b, &k| {
                b.iter(|| apply_k(black_box(&g), k, black_box(&x)).unwrap())
            });
        }
    }
    group.finish();
}

fn spectral_radius(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius_k");
    let kar = karate();
    for k in [2, 3] {
        let cfg = SpectralConfig::new(k);
        group.bench_with_input(BenchmarkId::new("karate", k), &cfg, |b, cfg| {
            b.iter(|| spectral_radius_k(black_box(&kar), cfg).unwrap())
        });
    }
    let g = sparse_gnp(5_000, 10.0);
    let cfg = SpectralConfig::new(3).with_tol(1e-8);
    group.bench_function("gnp5000_k3", |b| b.iter(|| spectral_radius_k(black_box(&g), &cfg).unwrap()));
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let g = sparse_gnp(50_000, 8.0);
    c.bench_function("coreness/gnp50000", |b| b.iter(|| coreness(black_box(&g))));
    c.bench_function("peel_k4/gnp50000", |b| b.iter(|| peel(black_box(&g), 4).unwrap()));
}

fn cycles(c: &mut Criterion) {
    let kar = karate();
    c.bench_function("cycle_counts/karate_l5", |b| b.iter(|| cycle_counts(black_box(&kar), 5).unwrap()));
    let g = sparse_gnp(2_000, 6.0);
    c.bench_function("cycle_counts/gnp2000_l4", |b| b.iter(|| cycle_counts(black_box(&g), 4).unwrap()));
}

criterion_group!(benches, tensor_apply, spectral_radius, decomposition, cycles);
criterion_main!(benches);
