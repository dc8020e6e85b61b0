use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use twistlab_bench::{cn3, cng4, dfg_twist_over_grid, fg4, full_basis};
use twistlab_core::{
    binary_clone, check_theses, classify, enumerate_pi1_full_subalgebras, find_isomorphism,
    named_matrix, verify_representation, AlgebraClass, TwistKind,
};

fn bench_clone_closure(c: &mut Criterion) {
    let m = cn3();
    let basis = full_basis(&m);
    c.bench_function("clone_closure_cn3", |b| {
        b.iter(|| binary_clone(black_box(&m), &basis, 200_000).unwrap().len())
    });

    let m = fg4();
    let basis = full_basis(&m);
    c.bench_function("clone_closure_fg4_capped_20k", |b| {
        b.iter(|| binary_clone(black_box(&m), &basis, 20_000).unwrap().len())
    });
}

fn bench_subalgebras(c: &mut Criterion) {
    let t = dfg_twist_over_grid();
    c.bench_function("pi1_full_subalgebras_dfg_grid", |b| {
        b.iter(|| enumerate_pi1_full_subalgebras(black_box(&t), usize::MAX).unwrap().len())
    });
}

fn bench_classify(c: &mut Criterion) {
    let m = cng4();
    let a = m
        .algebra()
        .with_constants(&[("zero", "0")])
        .unwrap();
    c.bench_function("classify_cng4", |b| {
        b.iter(|| classify(black_box(&a), AlgebraClass::CngAlgebra).unwrap().holds)
    });
}

fn bench_representation(c: &mut Criterion) {
    let t = dfg_twist_over_grid();
    c.bench_function("verify_representation_dfg_grid", |b| {
        b.iter(|| verify_representation(black_box(&t.algebra), TwistKind::DFg).unwrap().overall)
    });
}

fn bench_iso(c: &mut Criterion) {
    let a = named_matrix("CNg4").unwrap().algebra().clone();
    let b2 = named_matrix("CNg4").unwrap().algebra().clone();
    c.bench_function("find_isomorphism_cng4", |b| {
        b.iter(|| find_isomorphism(black_box(&a), black_box(&b2)).unwrap().is_some())
    });
}

fn bench_theses(c: &mut Criterion) {
    let m = cng4();
    c.bench_function("check_theses_cng4", |b| {
        b.iter(|| check_theses(black_box(&m)).unwrap().all_valid())
    });
}

criterion_group!(
    benches,
    bench_clone_closure,
    bench_subalgebras,
    bench_classify,
    bench_representation,
    bench_iso,
    bench_theses
);
criterion_main!(benches);
