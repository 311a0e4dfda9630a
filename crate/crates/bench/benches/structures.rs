use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semisplit::catalog;
use semisplit::connections::{canonical_connection, parallel_connection_report};
use semisplit::lie::Representation;
use semisplit::lsa::lsa_from_totally_real;
use semisplit::structures::{cocycle_space, integrability_report};
use semisplit_bench::{heisenberg, tangent_heisenberg};

fn integrability(c: &mut Criterion) {
    let mut group = c.benchmark_group("integrability_report");
    for n in 1..=3 {
        let (split, j) = tangent_heisenberg(n);
        group.bench_with_input(BenchmarkId::from_parameter(split.dim()), &(split, j), |b, (s, j)| {
            b.iter(|| integrability_report(black_box(s), black_box(j)).unwrap())
        });
    }
    group.finish();
}

fn connections(c: &mut Criterion) {
    let (split, j) = tangent_heisenberg(1);
    c.bench_function("canonical_connection/6", |b| b.iter(|| canonical_connection(black_box(&split), black_box(&j)).unwrap()));
    let mut group = c.benchmark_group("parallel_connection_report");
    group.sample_size(10);
    group.bench_function("6", |b| b.iter(|| parallel_connection_report(black_box(&split), black_box(&j)).unwrap()));
    group.finish();
}

fn lsa(c: &mut Criterion) {
    let mut group = c.benchmark_group("lsa_from_totally_real");
    for n in 1..=3 {
        let (split, j) = tangent_heisenberg(n);
        group.bench_with_input(BenchmarkId::from_parameter(split.h_dim()), &(split, j), |b, (s, j)| {
            b.iter(|| lsa_from_totally_real(black_box(s), black_box(j)).unwrap())
        });
    }
    group.finish();
}

fn cocycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("cocycle_space_adjoint");
    for n in 1..=2 {
        let h = heisenberg(n);
        let ad = Representation::adjoint(&h);
        group.bench_with_input(BenchmarkId::from_parameter(h.dim()), &(h, ad), |b, (h, ad)| b.iter(|| cocycle_space(black_box(h), black_box(ad))));
    }
    group.finish();
}

fn catalog_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("verify_all", |b| b.iter(catalog::verify_all));
    group.finish();
}

criterion_group!(benches, integrability, connections, lsa, cocycles, catalog_verify);
criterion_main!(benches);
