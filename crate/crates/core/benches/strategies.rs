//! Parallel against sequential execution on the hot loops: group closure and
//! class data, Molien sums, and Weyl group statistics.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use reflex_core::exec::Strategy;
use reflex_core::groups::build_monomial_group_with;
use reflex_core::rootsys::{build_root_system, RootType};
use reflex_core::series::MolienData;
use reflex_core::weylpoincare::{enumerate_weyl, poincare_from_elements, Weighting};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn group_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build G(6,2,4)");
    group.sample_size(10);
    for (label, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(label), &s, |b, &s| {
            b.iter(|| build_monomial_group_with(6, 2, 4, s).unwrap())
        });
    }
    group.finish();
}

fn molien(c: &mut Criterion) {
    let g = build_monomial_group_with(6, 2, 4, Strategy::Parallel).unwrap();
    let mut group = c.benchmark_group("Molien data G(6,2,4)");
    group.sample_size(10);
    for (label, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(label), &s, |b, &s| b.iter(|| MolienData::new(&g, s).unwrap()));
    }
    group.finish();
}

fn weyl_statistics(c: &mut Criterion) {
    let b5 = build_root_system(RootType::B, 5).unwrap();
    let elements = enumerate_weyl(&b5).unwrap();
    let weights = Weighting::SquaredLength.weights(&b5);
    let mut group = c.benchmark_group("weighted Poincaré B5");
    for (label, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(label), &s, |b, &s| {
            b.iter(|| poincare_from_elements(&elements, &weights, s))
        });
    }
    group.finish();
}

criterion_group!(benches, group_build, molien, weyl_statistics);
criterion_main!(benches);
