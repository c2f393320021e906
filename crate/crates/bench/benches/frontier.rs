use std::time::Duration;

use bgctp::oracle::{exact_frontier, EnumerationBudget};
use bgctp::solver::{solve_frontier, supported_frontier, FrontierConfig, SupportedConfig};
use bgctp_bench::{density_sweep, grid, windmills};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn eps_constraint(c: &mut Criterion) {
    let mut group = c.benchmark_group("eps-constraint");
    group.measurement_time(Duration::from_secs(5));
    for f in density_sweep(10, 1) {
        for (label, cut_enabled) in [("cut", true), ("nocut", false)] {
            let config = FrontierConfig {
                cut_enabled,
                ..FrontierConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(label, &f.name), &f.graph, |b, g| {
                b.iter(|| solve_frontier(black_box(g), &config).unwrap())
            });
        }
    }
    group.finish();
}

fn windmill_growth(c: &mut Criterion) {
    let mut group = c.benchmark_group("windmill");
    for f in windmills(6) {
        group.bench_with_input(BenchmarkId::from_parameter(&f.name), &f.graph, |b, g| {
            b.iter(|| solve_frontier(black_box(g), &FrontierConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn against_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("small-grid");
    let f = grid(8, 3);
    group.bench_function("eps", |b| {
        b.iter(|| solve_frontier(black_box(&f.graph), &FrontierConfig::default()).unwrap())
    });
    group.bench_function("supported", |b| {
        b.iter(|| supported_frontier(black_box(&f.graph), &SupportedConfig::default()))
    });
    group.bench_function("oracle", |b| {
        b.iter(|| exact_frontier(black_box(&f.graph), EnumerationBudget::default()).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    eps_constraint,
    windmill_growth,
    against_enumeration
);
criterion_main!(benches);
