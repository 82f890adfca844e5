//! Benchmarks for the hot paths: exact row reduction, minimal resolutions,
//! Ext dimension chains, Hom spaces, and the two-sided main complex.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gorenstein_bench::{dense_matrix, kxy, rad2, simple};
use gorenstein_core::complexes::Resolution;
use gorenstein_core::{build_main_complex, ext_regular_dims, hom_dim, Module, Side};

fn bench_rref(c: &mut Criterion) {
    let m = dense_matrix(5, 60, 80);
    c.bench_function("rref 60x80 over F_5", |b| {
        b.iter(|| black_box(&m).rref())
    });
}

fn bench_kernel(c: &mut Criterion) {
    let m = dense_matrix(7, 80, 60);
    c.bench_function("kernel basis 80x60 over F_7", |b| {
        b.iter(|| black_box(&m).kernel_basis())
    });
}

fn bench_resolution(c: &mut Criterion) {
    let a = kxy();
    let s = simple(&a);
    c.bench_function("minimal resolution to depth 8", |b| {
        b.iter(|| {
            let mut r = Resolution::new(black_box(&s));
            r.ensure(8);
            black_box(r.term(8).dim())
        })
    });
}

fn bench_ext_chain(c: &mut Criterion) {
    let a = rad2();
    let s = simple(&a);
    c.bench_function("Ext^1..6 against the regular module", |b| {
        b.iter(|| black_box(ext_regular_dims(black_box(&s), 6, false)))
    });
}

fn bench_hom(c: &mut Criterion) {
    let a = kxy();
    let m = Module::regular(&a, Side::Left);
    let s = simple(&a);
    c.bench_function("Hom(A, S) dimension", |b| {
        b.iter(|| black_box(hom_dim(black_box(&m), black_box(&s))))
    });
}

fn bench_main_complex(c: &mut Criterion) {
    let a = kxy();
    let s = simple(&a);
    c.bench_function("main complex at bound 4", |b| {
        b.iter(|| black_box(build_main_complex(black_box(&s), 4).expect("builds")))
    });
}

criterion_group!(
    benches,
    bench_rref,
    bench_kernel,
    bench_resolution,
    bench_ext_chain,
    bench_hom,
    bench_main_complex
);
criterion_main!(benches);
