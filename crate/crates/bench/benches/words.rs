use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sfword::construct::{phi_prefix, verify_claim_a, verify_claim_b};
use sfword::disposability::{is_irreducibly_square_free, is_k_irreducible};
use sfword::{construct, find_square, Morphism};

fn square_detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_square");
    for n in [100, 1_000, 10_000, 100_000] {
        let w = phi_prefix(n);
        group.bench_with_input(BenchmarkId::new("phi-prefix", n), &w, |b, w| {
            b.iter(|| find_square(black_box(w)))
        });
    }
    group.finish();
}

fn irreducibility(c: &mut Criterion) {
    let mut group = c.benchmark_group("irreducibility");
    for n in [100, 1_000] {
        let w = phi_prefix(n);
        group.bench_with_input(BenchmarkId::new("k1", n), &w, |b, w| {
            b.iter(|| is_irreducibly_square_free(black_box(w)).unwrap())
        });
    }
    let tau5 = Morphism::tau().power(5).unwrap();
    let w = tau5.image(sfword::Letter::ONE).clone();
    group.bench_function("k2/tau5", |b| {
        b.iter(|| is_k_irreducible(black_box(&w), 2).unwrap())
    });
    group.finish();
}

fn construction(c: &mut Criterion) {
    c.bench_function("construct/300", |b| {
        b.iter(|| construct(black_box(300)).unwrap())
    });
    c.bench_function("construct/3..=300", |b| {
        b.iter(|| (3..=300).filter_map(|n| construct(n).ok()).count())
    });
}

fn claims(c: &mut Criterion) {
    let mut group = c.benchmark_group("claims");
    group.sample_size(10);
    group.bench_function("suffix/10000", |b| {
        b.iter(|| verify_claim_a(black_box(10_000)).unwrap())
    });
    group.bench_function("prefix/10000", |b| {
        b.iter(|| verify_claim_b(black_box(10_000)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    square_detection,
    irreducibility,
    construction,
    claims
);
criterion_main!(benches);
