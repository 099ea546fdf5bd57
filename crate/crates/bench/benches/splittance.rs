use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use splitkit::oracle::{Oracle, Sampler};
use splitkit::splittance::splittance_matrix_by_cells;
use splitkit::{degree_sequence, digraph_splittance, is_digraphic, is_split_sequence, repair, splittance_matrix};

fn matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("splittance_matrix");
    for n in [8, 32, 128] {
        let d = degree_sequence(&Sampler::new(n as u64).digraph(n));
        group.bench_with_input(BenchmarkId::new("prefix_sums", n), &d, |b, d| {
            b.iter(|| splittance_matrix(black_box(d)))
        });
        if n <= 32 {
            group.bench_with_input(BenchmarkId::new("by_cells", n), &d, |b, d| {
                b.iter(|| splittance_matrix_by_cells(black_box(d)))
            });
        }
    }
    group.finish();
}

fn recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognition");
    for n in [16, 256, 1024] {
        let d = degree_sequence(&Sampler::new(n as u64).digraph(n));
        group.bench_with_input(BenchmarkId::new("is_digraphic", n), &d, |b, d| b.iter(|| is_digraphic(black_box(d))));
        group.bench_with_input(BenchmarkId::new("is_split_sequence", n), &d, |b, d| {
            b.iter(|| is_split_sequence(black_box(d)))
        });
        group.bench_with_input(BenchmarkId::new("digraph_splittance", n), &d, |b, d| {
            b.iter(|| digraph_splittance(black_box(d)))
        });
    }
    group.finish();
}

fn repair_vs_brute_force(c: &mut Criterion) {
    let oracle = Oracle::default();
    let g = Sampler::new(4).digraph(4);
    let mut group = c.benchmark_group("repair_n4");
    group.bench_function("repair", |b| b.iter(|| repair(black_box(&g))));
    group.bench_function("brute_splittance", |b| b.iter(|| oracle.brute_splittance(black_box(&g))));
    group.finish();

    let big = Sampler::new(64).digraph(64);
    c.bench_function("repair_n64", |b| b.iter(|| repair(black_box(&big))));
}

criterion_group!(benches, matrix, recognition, repair_vs_brute_force);
criterion_main!(benches);
