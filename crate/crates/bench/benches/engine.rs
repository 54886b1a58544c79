use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use orbitdual::conormal::verify_case;
use orbitdual::exactlin::{random_vector, seeded};
use orbitdual::repcat::invariants::solve_invariants;
use orbitdual::repcat::{build_case, Side};
use orbitdual::Matrix;

fn rank(c: &mut Criterion) {
    let mut rng = seeded(1);
    let rows: Vec<_> = (0..24).map(|_| random_vector(&mut rng, 24, 50)).collect();
    let m = Matrix::from_rows(&rows);
    c.bench_function("rank 24x24", |b| b.iter(|| black_box(&m).rank()));
}

fn invariants(c: &mut Criterion) {
    let case = build_case(&"A7".parse().unwrap()).unwrap();
    let gens = case.semisimple(Side::V);
    c.bench_function("spin7 quadratic invariant", |b| b.iter(|| solve_invariants(black_box(&gens), None, 2)));
}

fn verify(c: &mut Criterion) {
    let case = build_case(&"A10 n=2 m=3".parse().unwrap()).unwrap();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("A10 n=2 m=3", |b| b.iter(|| verify_case(black_box(&case), 8, 42, 100).unwrap()));
    g.finish();
}

criterion_group!(benches, rank, invariants, verify);
criterion_main!(benches);
