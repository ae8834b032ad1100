//! Timings for the exhaustive sweeps: the full pair suite, the
//! categorical solution on the 36-element morphism set, the braid sweep
//! alone, and the numeric differentiation probes.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use rbcm::catalog;
use rbcm::suites;
use rbcm::tangent::{differentiate_rb_pair, TangentProbe};

fn bench_group_pair_suite(c: &mut Criterion) {
    let (_, pair) = catalog::finite_pair("s3-conj-inverse").unwrap();
    c.bench_function("group_pair_suite_s3_inverse", |b| {
        b.iter(|| black_box(suites::group_pair_suite(black_box(&pair), 0)))
    });
}

fn bench_categorical(c: &mut Criterion) {
    let (module, pair) = catalog::finite_pair("s3-conj-factorization").unwrap();
    c.bench_function("categorical_suite_s3_factorization", |b| {
        b.iter(|| black_box(suites::categorical_suite(black_box(&module), &pair, 0).unwrap()))
    });
}

fn bench_braid_morphisms(c: &mut Criterion) {
    let (_, pair) = catalog::finite_pair("s3-conj-inverse").unwrap();
    let induced = rbcm::rb::groups::induced_rb_semidirect(&pair)
        .unwrap()
        .value;
    let sol = rbcm::ybe::set_ybe_from_rb(&induced, 0).unwrap().value;
    let rbcm::ybe::SetSolution::Finite { names, r } = sol else {
        unreachable!()
    };
    c.bench_function("braid_sweep_36_cubed", |b| {
        b.iter(|| black_box(rbcm::ybe::braid_check(&names, black_box(&r), "bench")))
    });
}

fn bench_algebra_suite(c: &mut Criterion) {
    let pair = catalog::algebra_pair("h3-projection").unwrap();
    c.bench_function("algebra_suite_h3_projection", |b| {
        b.iter(|| black_box(suites::algebra_suite(black_box(&pair), 0.0)))
    });
}

fn bench_differentiation(c: &mut Criterion) {
    let (_, pair) = catalog::matrix_pair(
        "heis-conj-factorization",
        5,
        rbcm::group::matrix::DEFAULT_TOLERANCE,
    )
    .unwrap();
    let probe = TangentProbe::jacobian_default();
    c.bench_function("differentiate_rb_pair_heisenberg", |b| {
        b.iter(|| black_box(differentiate_rb_pair(black_box(&pair), &probe, 1e-6).unwrap()))
    });
}

criterion_group!(
    sweeps,
    bench_group_pair_suite,
    bench_categorical,
    bench_braid_morphisms,
    bench_algebra_suite,
    bench_differentiation
);
criterion_main!(sweeps);
