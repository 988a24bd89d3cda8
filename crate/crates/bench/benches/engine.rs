use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superqa::classify::{classify_with, RibbonSearch};
use superqa::repmod::{composition_factors_of, standard_module, w_module};
use superqa::scalar::RatFuncField;
use superqa::superdata::SuperAData;
use superqa::tangle::{cyclotomic_coloring, invariant_braid, invariant_braid_in};
use superqa::uq_rank2::r_matrix_braiding;
use superqa_bench::{knot_braid, BENCH_KNOTS};

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant");
    let coloring = cyclotomic_coloring(8).unwrap();
    for name in BENCH_KNOTS {
        let b = knot_braid(name);
        group.bench_with_input(BenchmarkId::new("symbolic", name), &b, |bench, b| {
            bench.iter(|| invariant_braid(black_box(b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("order_8", name), &b, |bench, b| {
            bench.iter(|| invariant_braid_in(&coloring, black_box(b)).unwrap())
        });
    }
    group.finish();
}

fn braiding(c: &mut Criterion) {
    let w = w_module(&RatFuncField).unwrap();
    c.bench_function("braiding/W", |b| {
        b.iter(|| r_matrix_braiding(black_box(&w), &w).unwrap())
    });
}

fn composition(c: &mut Criterion) {
    let mut group = c.benchmark_group("composition");
    for order in [4u32, 6] {
        let m = standard_module(1, 2, order).unwrap();
        group.bench_with_input(BenchmarkId::new("M(1,2)", order), &m, |b, m| {
            b.iter(|| composition_factors_of(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let data = SuperAData::build(4, &[1, 2, 3, 4], 4).unwrap();
    let mut group = c.benchmark_group("classify");
    for (name, search) in [
        ("exhaustive", RibbonSearch::Exhaustive),
        ("congruence", RibbonSearch::Congruence),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| classify_with(black_box(&data), search).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, invariants, braiding, composition, classification);
criterion_main!(benches);
