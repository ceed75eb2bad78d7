//! Sequential versus parallel trial evaluation on the main deciders, plus a
//! timing-only scaling run of `zariski_dense` over `SL(n)` for `n = 2..8`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use zariski_core::linalg::validate;
use zariski_core::{
    is_hyperoctahedral, is_sn, zariski_dense, DensityConfig, Execution, GaloisConfig, GeneratorSet, GroupKind,
    IntPolynomial, IntegerMatrix, StreamSeed,
};

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn galois(mode: Execution) -> GaloisConfig {
    GaloisConfig {
        execution: mode,
        ..GaloisConfig::default()
    }
}

fn density(mode: Execution, word_length: usize) -> DensityConfig {
    DensityConfig {
        word_length: Some(word_length),
        galois: galois(mode),
        ..DensityConfig::default()
    }
}

/// `x^n - x - 1`, whose Galois group is always `S_n`.
fn selmer(n: usize) -> IntPolynomial {
    let mut c = vec![0i64; n + 1];
    c[0] = -1;
    c[1] = -1;
    c[n] = 1;
    IntPolynomial::from_i64(&c)
}

/// A shear and a signed cyclic permutation; they generate `SL(n, Z)`.
fn sl_generators(n: usize) -> GeneratorSet {
    let shear = IntegerMatrix::from_fn(n, |i, j| ((i == j) as i64 + (i == 0 && j == 1) as i64).into());
    let sign = if n % 2 == 0 { -1 } else { 1 };
    let cycle = IntegerMatrix::from_fn(n, |i, j| {
        if (i + 1) % n == j {
            (if i == n - 1 { sign } else { 1 }).into()
        } else {
            0.into()
        }
    });
    validate(GroupKind::SpecialLinear, n, vec![shear, cycle]).unwrap()
}

fn bench_galois(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_sn");
    for n in [7usize, 11, 17] {
        let f = selmer(n);
        for mode in MODES {
            group.bench_with_input(BenchmarkId::new(format!("{mode:?}"), n), &f, |b, f| {
                b.iter(|| is_sn(black_box(f), 1e-9, StreamSeed::new(1), &galois(mode)).unwrap())
            });
        }
    }
    group.finish();

    // A non-generic input runs every trial, the worst case for both modes.
    let mut group = c.benchmark_group("is_hyperoctahedral_negative");
    let f = IntPolynomial::from_i64(&[1, 1, 1, 1, 1]);
    for mode in MODES {
        group.bench_function(format!("{mode:?}"), |b| {
            b.iter(|| is_hyperoctahedral(black_box(&f), 1e-9, StreamSeed::new(1), &galois(mode)).unwrap())
        });
    }
    group.finish();
}

fn bench_density(c: &mut Criterion) {
    let mut group = c.benchmark_group("zariski_dense");
    group.sample_size(10);
    for n in 2..=8usize {
        let gs = sl_generators(n);
        for mode in MODES {
            group.bench_with_input(BenchmarkId::new(format!("{mode:?}"), n), &gs, |b, gs| {
                b.iter(|| zariski_dense(black_box(gs), 1e-6, StreamSeed::new(7), &density(mode, 40)).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_galois, bench_density);
criterion_main!(benches);
