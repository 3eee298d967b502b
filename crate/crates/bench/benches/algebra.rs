use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lieform::catalog::{abelian_plus_r2, h3, r2};
use lieform::derivation::{derivation_algebra, is_intravariant_extension, is_intravariant_linear};
use lieform::enumerate::EnumerationBudget;
use lieform::{chief_series, f_normalisers, sweep, BuiltinFormation, FieldSpec};
use lieform_bench::{busiest_algebra, gf, scrambled_matrix};

fn linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for (name, field) in [("GF(2)", gf(2)), ("GF(101)", gf(101)), ("Q", FieldSpec::RATIONALS)] {
        let m = scrambled_matrix(field, 12);
        group.bench_with_input(BenchmarkId::from_parameter(name), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let l = busiest_algebra(3);
    c.bench_function("derivation_algebra/h3", |b| b.iter(|| derivation_algebra(black_box(&h3(FieldSpec::RATIONALS)))));
    c.bench_function("chief_series/dim3", |b| b.iter(|| chief_series(black_box(&l))));
    let a = abelian_plus_r2(gf(3));
    let u = a.whole().as_subalgebra();
    c.bench_function("intravariance/linear", |b| b.iter(|| is_intravariant_linear(black_box(&a), &u)));
    c.bench_function("intravariance/extension", |b| b.iter(|| is_intravariant_extension(black_box(&a), &u)));
}

fn normalisers(c: &mut Criterion) {
    let r = r2(gf(3));
    c.bench_function("f_normalisers/r2", |b| b.iter(|| f_normalisers(black_box(&r), &BuiltinFormation::Nilpotent)));
    let l = busiest_algebra(4);
    c.bench_function("f_normalisers/dim4", |b| b.iter(|| f_normalisers(black_box(&l), &BuiltinFormation::Nilpotent)));
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let budget = EnumerationBudget::uncapped(gf(2), 3);
    group.bench_function("GF(2)/dim3", |b| b.iter(|| sweep(&budget, &[BuiltinFormation::Nilpotent], None)));
    group.finish();
}

criterion_group!(benches, linear_algebra, structure, normalisers, sweeps);
criterion_main!(benches);
