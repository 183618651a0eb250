use std::hint::black_box;
use std::sync::Arc;

use comalg::algebra::catalog;
use comalg::bimodule::tensor_over;
use comalg::coherence::{case_seeds, run_case, CaseKind};
use comalg::fusion::verify_fusion_theorem;
use comalg::{AlgebraMorphism, Bimodule};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn coherence_cases(c: &mut Criterion) {
    let seed = case_seeds(0, 1)[0];
    let mut group = c.benchmark_group("coherence");
    group.sample_size(20);
    for kind in CaseKind::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(kind.name()), &kind, |b, &kind| {
            b.iter(|| run_case(kind, 0, black_box(seed), kind.default_max_dim()))
        });
    }
    group.finish();
}

fn fusion(c: &mut Criterion) {
    let m2 = Arc::new(catalog::matrix_algebra_2());
    let k = Arc::new(catalog::ground_field());
    let unit = AlgebraMorphism::unit_map(&k, &m2).unwrap();
    c.bench_function("verify_fusion M2-K-M2", |b| {
        b.iter(|| verify_fusion_theorem(&m2, &k, &m2, &unit, &unit).unwrap())
    });
    let reg = Bimodule::regular(&m2);
    c.bench_function("tensor_over M2 regular", |b| b.iter(|| tensor_over(black_box(&reg), &reg).unwrap()));
}

criterion_group!(benches, coherence_cases, fusion);
criterion_main!(benches);
