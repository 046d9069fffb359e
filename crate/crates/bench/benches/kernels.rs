//! Criterion benchmarks for the numeric kernels that dominate workbench
//! runtimes: Hurwitz zeta, L evaluation, derivative circles, the ℓ sieve,
//! Gauss sums, bump Mellin transforms, and a small zero-scan window.

use criterion::{criterion_group, criterion_main, Criterion};
use lwb_core::arith::EllSieve;
use lwb_core::characters::{enumerate_characters, gauss_sum};
use lwb_core::lfunc::{dirichlet_l, hurwitz_zeta, l_derivative};
use lwb_core::zeros::scan_zeros;
use lwb_core::{BumpFunction, Character, EvalParams};
use num_complex::Complex64;
use std::hint::black_box;

fn bench_hurwitz(c: &mut Criterion) {
    let p = EvalParams::default();
    let mut group = c.benchmark_group("hurwitz_zeta");
    for t in [10.0, 100.0, 300.0] {
        group.bench_function(format!("t={t}"), |b| {
            let s = Complex64::new(0.5, t);
            b.iter(|| hurwitz_zeta(black_box(s), 0.25, &p).unwrap())
        });
    }
    group.finish();
}

fn bench_l_eval(c: &mut Criterion) {
    let p = EvalParams::default();
    let chi = Character::from_index(4, 1).unwrap();
    c.bench_function("dirichlet_l_chi4_t100", |b| {
        let s = Complex64::new(0.5, 100.0);
        b.iter(|| dirichlet_l(black_box(s), &chi, &p).unwrap())
    });
    c.bench_function("l_derivative_chi4_t100", |b| {
        let s = Complex64::new(0.5, 100.0);
        b.iter(|| l_derivative(black_box(s), &chi, 1, &p).unwrap())
    });
}

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("ell_sieve_1e6", |b| {
        b.iter(|| EllSieve::with_default_cap(black_box(1_000_000)).unwrap())
    });
}

fn bench_gauss(c: &mut Criterion) {
    let chars = enumerate_characters(24).unwrap();
    c.bench_function("gauss_sums_q24_all", |b| {
        b.iter(|| {
            for chi in &chars {
                black_box(gauss_sum(chi));
            }
        })
    });
}

fn bench_mellin(c: &mut Criterion) {
    let bump = BumpFunction::standard();
    c.bench_function("bump_mellin_t30", |b| {
        let s = Complex64::new(0.5, 30.0);
        b.iter(|| black_box(bump.mellin(black_box(s))))
    });
}

fn bench_zero_window(c: &mut Criterion) {
    let p = EvalParams::default();
    let one = Character::trivial();
    let mut group = c.benchmark_group("scan_zeros");
    group.sample_size(10);
    group.bench_function("zeta_window_10_20", |b| {
        b.iter(|| scan_zeros(&one, 10.0, 20.0, &p).unwrap())
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_hurwitz,
    bench_l_eval,
    bench_sieve,
    bench_gauss,
    bench_mellin,
    bench_zero_window
);
criterion_main!(kernels);
