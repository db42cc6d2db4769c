use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ellgenus_core::genus::universal_genus;
use ellgenus_core::modular::{delta1, eps2};
use ellgenus_core::string24::{classify, image_lattice_basis, ClassifyInput, DEFAULT_WITTEN_ORDER};
use ellgenus_core::twist::{ell1, ell2};
use ellgenus_core::verify::{random_vectors, run, Level, SEED};
use ellgenus_core::IndexQuadruple;

fn modular(c: &mut Criterion) {
    c.bench_function("delta1 to q^10", |b| b.iter(|| delta1(black_box(21))));
    c.bench_function("eps2 to q^10", |b| b.iter(|| eps2(black_box(21))));
}

fn genus(c: &mut Criterion) {
    let mut g = c.benchmark_group("genus");
    g.sample_size(20);
    g.bench_function("universal genus k=6", |b| b.iter(|| universal_genus(black_box(6))));
    let v = random_vectors(SEED, 6, 1, 100).remove(0);
    g.bench_function("Ell1 dim 24 to q^3", |b| b.iter(|| ell1(black_box(&v), 7)));
    g.bench_function("Ell2 dim 24 to q^3", |b| b.iter(|| ell2(black_box(&v), 7)));
    g.finish();
}

fn string24(c: &mut Criterion) {
    c.bench_function("image lattice HNF", |b| b.iter(image_lattice_basis));
    let k = IndexQuadruple::new([1, 0, 218076, 47360]);
    c.bench_function("classify kappa", |b| {
        b.iter(|| classify(black_box(&ClassifyInput::Kappa(k.clone())), DEFAULT_WITTEN_ORDER))
    });
    let v = random_vectors(SEED, 6, 1, 100).remove(0);
    let mut g = c.benchmark_group("classify");
    g.sample_size(20);
    g.bench_function("classify pontryagin", |b| {
        b.iter(|| classify(black_box(&ClassifyInput::Pontryagin(v.clone())), DEFAULT_WITTEN_ORDER))
    });
    g.bench_function("verify fast", |b| b.iter(|| run(Level::Fast)));
    g.finish();
}

criterion_group!(benches, modular, genus, string24);
criterion_main!(benches);
