use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qdist_core::graph::{cycle, path};
use qdist_core::invariants::matching_number;
use qdist_core::exact::int;
use qdist_core::spectral::{float_matrix, signless_laplacian, ExactCounter, MatrixKind};
use qdist_core::verify::{check_graph, TheoremId};
use qdist_core::{eigenvalues_sym, inertia, make_family, FamilySpec, Graph};

fn dense(n: usize) -> Graph {
    // a fixed pseudo-random graph with about half the pairs present
    let mut edges = Vec::new();
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    for j in 1..n {
        for i in 0..j {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            if x & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn exact_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_lt");
    for n in [7, 12, 20, 40] {
        let g = dense(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            let counter = ExactCounter::signless(g);
            b.iter(|| counter.count_lt_int(black_box(n as i64 - 3)))
        });
    }
    group.finish();

    let g = make_family(&FamilySpec::Gndt { n: 30, d: 5, t: 3 }).unwrap();
    let m = signless_laplacian(&g).shifted(&int(26));
    c.bench_function("rational_inertia/gndt_30_5_3", |b| b.iter(|| inertia(black_box(&m))));
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [7, 12, 20, 40] {
        let a = float_matrix(&dense(n), MatrixKind::Q);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| eigenvalues_sym(black_box(a))));
    }
    group.finish();
}

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching");
    for (name, g) in [("dense_40", dense(40)), ("cycle_101", cycle(101)), ("path_200", path(200))] {
        group.bench_function(name, |b| b.iter(|| matching_number(black_box(&g))));
    }
    group.finish();
}

fn checkers(c: &mut Criterion) {
    let g = dense(7);
    c.bench_function("check/diameter_main_n7", |b| b.iter(|| check_graph(TheoremId::DiameterMain, black_box(&g))));
}

criterion_group!(benches, exact_counts, jacobi, matching, checkers);
criterion_main!(benches);
