use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wturan_core::extremal::{optimal_product_partition, optimal_sum_partition, upgrade_to_multipartite};
use wturan_core::generate::{random_multipartite, random_weights, seeded_rng};
use wturan_core::oracle::brute_force_ex;
use wturan_core::{ForbiddenPattern, Objective, SimpleGraph, WeightVector, WeightedGraph};

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [6usize, 7, 8] {
        let w = random_weights(&mut seeded_rng(n as u64), n, 0, 100);
        group.bench_with_input(BenchmarkId::new("sum_k3", n), &w, |b, w| {
            b.iter(|| brute_force_ex(black_box(w), &ForbiddenPattern::Clique(3), Objective::Sum).unwrap())
        });
    }
    let c5 = ForbiddenPattern::General(SimpleGraph::cycle(5).unwrap());
    let w = WeightVector::uniform(7, 1);
    group.bench_function("sum_c5_7", |b| b.iter(|| brute_force_ex(black_box(&w), &c5, Objective::Sum).unwrap()));
    group.finish();
}

fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition");
    for (n, parts) in [(32usize, 3usize), (64, 4), (40, 10)] {
        let w = random_weights(&mut seeded_rng(7), n, 0, 1000);
        group.bench_with_input(BenchmarkId::new("sum", format!("{n}x{parts}")), &w, |b, w| {
            b.iter(|| optimal_sum_partition(black_box(w), parts).unwrap())
        });
    }
    for (n, parts) in [(16usize, 2usize), (20, 3), (24, 4)] {
        let w = random_weights(&mut seeded_rng(13), n, 1, 1000);
        group.bench_with_input(BenchmarkId::new("product", format!("{n}x{parts}")), &w, |b, w| {
            b.iter(|| optimal_product_partition(black_box(w), parts).unwrap())
        });
    }
    group.finish();
}

fn upgrade(c: &mut Criterion) {
    let mut rng = seeded_rng(3);
    let g = random_multipartite(&mut rng, 32, 4, 0.6);
    let wg = WeightedGraph::new(g, random_weights(&mut rng, 32, 0, 100)).unwrap();
    c.bench_function("upgrade_32_k5", |b| b.iter(|| upgrade_to_multipartite(black_box(&wg), 5).unwrap()));
}

criterion_group!(benches, oracle, partitions, upgrade);
criterion_main!(benches);
