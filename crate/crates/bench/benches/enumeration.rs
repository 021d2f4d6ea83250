use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use solvgraph_core::solvabilizer::PairOracle;
use solvgraph_core::{build_graph, catalog, graphs_isomorphic, GraphKind, Solver};

fn solvabilizers(c: &mut Criterion) {
    let e2 = catalog::algebra("E2@3").unwrap();
    let gl = catalog::algebra("gl2split@5").unwrap();
    c.bench_function("sol(E2@3) cold cache", |b| {
        b.iter_batched(
            || Solver::new(e2.clone()),
            |s| black_box(s.solvabilizer()),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("sol(gl2split@5) cold cache", |b| {
        b.iter_batched(
            || Solver::new(gl.clone()),
            |s| black_box(s.solvabilizer()),
            BatchSize::SmallInput,
        )
    });
    let warm = Solver::new(gl.clone());
    warm.solvabilizer();
    c.bench_function("sol(gl2split@5) warm cache", |b| {
        b.iter(|| black_box(warm.solvabilizer()))
    });
}

fn graphs(c: &mut Criterion) {
    let gl = catalog::algebra("gl2split@3").unwrap();
    c.bench_function("solvable graph gl2split@3", |b| {
        b.iter_batched(
            || Solver::new(gl.clone()),
            |s| black_box(build_graph(&s, GraphKind::Solvable).unwrap()),
            BatchSize::SmallInput,
        )
    });
    let psi = catalog::morphism("E2.psi@3").unwrap();
    let g1 = build_graph(&Solver::new(psi.source().clone()), GraphKind::Solvable).unwrap();
    let g2 = build_graph(&Solver::new(psi.target().clone()), GraphKind::Solvable).unwrap();
    c.bench_function("isomorphism E2 under psi", |b| {
        b.iter(|| black_box(graphs_isomorphic(&g1, &g2, 64).unwrap()))
    });
}

criterion_group!(benches, solvabilizers, graphs);
criterion_main!(benches);
