use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wmin_bench::bench_specs;
use wmin_core::realize::k14_realization;
use wmin_core::wdata::WData;
use wmin_core::{almost_compact, build_algebra, Rational};

fn construct(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_algebra");
    g.sample_size(10);
    for s in bench_specs() {
        g.bench_with_input(BenchmarkId::from_parameter(&s), &s, |b, s| b.iter(|| build_algebra(s).unwrap()));
    }
    g.finish();
}

fn involution(c: &mut Criterion) {
    let mut g = c.benchmark_group("almost_compact");
    g.sample_size(10);
    for s in bench_specs() {
        let alg = build_algebra(&s).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(&s), &alg, |b, a| b.iter(|| almost_compact(a).unwrap()));
    }
    g.finish();
}

fn k14(c: &mut Criterion) {
    let mut g = c.benchmark_group("k14_realization");
    g.sample_size(10);
    g.bench_function("b=3", |b| b.iter(|| k14_realization(&Rational::int(3)).unwrap()));
    g.finish();
}

fn classify(c: &mut Criterion) {
    let levels: Vec<Rational> = (-400..=100).map(|j| Rational::new(j, 20)).collect();
    for s in bench_specs() {
        let w = WData::new(&s).unwrap();
        c.bench_function(&format!("classify_grid/{s}"), |b| {
            b.iter(|| levels.iter().filter(|k| w.classify(k).unwrap().verdict.is_nontrivial_unitary()).count())
        });
    }
}

criterion_group!(benches, construct, involution, k14, classify);
criterion_main!(benches);
