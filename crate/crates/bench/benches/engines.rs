//! Benchmarks for the hot paths: sparse exact rank, twisted Hochschild
//! complexes, the excision pipeline, and the inertia decomposition.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use orbihom_bench::{m2_conjugation_data, qz2_data, shift_difference_matrix};
use orbihom_core::algebra::Bimodule;
use orbihom_core::bredon::library;
use orbihom_core::facthom::{evaluate, Orbifold1D, OrbifoldCircle};
use orbihom_core::field::FieldKind;
use orbihom_core::inertia::chen_ruan_betti;
use orbihom_core::resolutions::{hochschild_complex, HochschildComplexSpec};

fn bench_sparse_rank(c: &mut Criterion) {
    let small = shift_difference_matrix(1_000, 5_000);
    let large = shift_difference_matrix(10_000, 50_000);
    c.bench_function("rank/shift-difference 1k x 5k", |b| {
        b.iter(|| black_box(&small).rank())
    });
    c.bench_function("rank/shift-difference 10k x 50k", |b| {
        b.iter(|| black_box(&large).rank())
    });
}

fn bench_hochschild(c: &mut Criterion) {
    let data = m2_conjugation_data();
    let m = Bimodule::twisted_diagonal(&data.smooth, &data.twist).unwrap();
    c.bench_function("hochschild/M2 conj cap 4 normalized", |b| {
        b.iter(|| {
            let spec = HochschildComplexSpec {
                algebra: data.smooth.clone(),
                coefficients: m.clone(),
                degree_cap: 4,
                normalized: true,
            };
            hochschild_complex(black_box(&spec)).unwrap().homology()
        })
    });
}

fn bench_excision(c: &mut Criterion) {
    let qz2 = qz2_data();
    let circle = Orbifold1D::Circle(OrbifoldCircle::rotation_circle(2));
    c.bench_function("facthom/rotation circle Q[Z2] cap 4", |b| {
        b.iter(|| evaluate(black_box(&circle), &qz2, 4, true).unwrap())
    });
    let m2 = m2_conjugation_data();
    c.bench_function("facthom/rotation circle M2 cap 3", |b| {
        b.iter(|| evaluate(black_box(&circle), &m2, 3, true).unwrap())
    });
}

fn bench_inertia(c: &mut Criterion) {
    let torus = library::torus_z2_rotation();
    c.bench_function("chenruan/torus Z2 rotation", |b| {
        b.iter(|| chen_ruan_betti(black_box(&torus), FieldKind::Rational).unwrap())
    });
}

criterion_group!(
    benches,
    bench_sparse_rank,
    bench_hochschild,
    bench_excision,
    bench_inertia
);
criterion_main!(benches);
