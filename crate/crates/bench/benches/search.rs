use criterion::{criterion_group, criterion_main, Criterion};
use hypoham::{fixtures, is_hypohamiltonian, is_hypotraceable, join4_hypotraceable, next_level, seed_level, grinberg_feasible};
use std::hint::black_box;

fn hamilton(c: &mut Criterion) {
    let petersen = fixtures::petersen();
    c.bench_function("petersen hypohamiltonian", |b| b.iter(|| is_hypohamiltonian(black_box(&petersen))));
    let p = &petersen;
    let join = join4_hypotraceable([p, p, p, p], [0; 4]).unwrap();
    c.bench_function("petersen join hypotraceable", |b| b.iter(|| is_hypotraceable(black_box(&join))));
}

fn plane(c: &mut Criterion) {
    let dodeca = fixtures::dodecahedron();
    c.bench_function("dodecahedron canonical code", |b| b.iter(|| black_box(&dodeca).canonical_code()));
    let level = next_level(&next_level(&seed_level(20, [fixtures::icosahedron()]).unwrap()));
    c.bench_function("level (22, 2) to (23, 3)", |b| b.iter(|| next_level(black_box(&level))));
}

fn knapsack(c: &mut Criterion) {
    let dodeca = fixtures::dodecahedron();
    let fs = dodeca.face_sequence();
    c.bench_function("grinberg feasibility", |b| b.iter(|| grinberg_feasible(black_box(&fs))));
}

criterion_group!(benches, hamilton, plane, knapsack);
criterion_main!(benches);
