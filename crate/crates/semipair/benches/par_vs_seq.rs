use criterion::{criterion_group, criterion_main, Criterion};
use semipair::graph::Graph;
use semipair::solver::solve_block_graph;

fn bench_solve(c: &mut Criterion) {
    let g = Graph::path(10_000);
    c.bench_function("solve/path-10k", |b| {
        b.iter(|| solve_block_graph(std::hint::black_box(&g)).unwrap())
    });
}

criterion_group!(benches, bench_solve);
criterion_main!(benches);
