use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ggs_core::triple::count_canonical;
use ggs_core::verify::{check_hecke, check_qybe, WalkMode};
use ggs_core::{construct, verify_triple, LaurentPoly, Rational, TripleCatalog, VerifyOptions};

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_canonical");
    for n in [8, 10] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| count_canonical(n).unwrap())
        });
    }
    g.finish();
}

/// The triple with the largest `Γ₁` is the slowest to check.
fn largest(n: usize) -> ggs_core::BdTriple {
    let cat = TripleCatalog::enumerate(n).unwrap();
    cat.triples().iter().max_by_key(|t| t.size()).unwrap().clone()
}

fn checks(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    for n in [4, 6, 8] {
        let r = construct(&largest(n)).unwrap().r;
        g.bench_with_input(BenchmarkId::new("qybe_sparse", n), &r, |b, r| {
            b.iter(|| check_qybe(r, WalkMode::Sparse, false))
        });
        g.bench_with_input(BenchmarkId::new("qybe_full", n), &r, |b, r| {
            b.iter(|| check_qybe(r, WalkMode::Full, false))
        });
        g.bench_with_input(BenchmarkId::new("hecke", n), &r, |b, r| {
            b.iter(|| check_hecke(r, false))
        });
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let t = largest(7);
    c.bench_function("construct_n7", |b| b.iter(|| construct(black_box(&t)).unwrap()));
    c.bench_function("verify_triple_n7", |b| {
        b.iter(|| verify_triple(black_box(&t), &VerifyOptions::default()))
    });
}

fn algebra(c: &mut Criterion) {
    let p = LaurentPoly::from_terms([
        (Rational::new(1, 3), Rational::one()),
        (Rational::new(-5, 3), Rational::from_integer(-1)),
    ]);
    let q = &LaurentPoly::q_hat() * &p;
    c.bench_function("laurent_mul", |b| b.iter(|| black_box(&p) * black_box(&q)));
    let x = Rational::new(i64::MAX / 3, 7);
    c.bench_function("rational_mul_promote", |b| b.iter(|| black_box(&x) * black_box(&x)));
}

criterion_group!(benches, census, checks, pipeline, algebra);
criterion_main!(benches);
