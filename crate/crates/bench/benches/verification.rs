use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qfree_core::cayley::{baaj_skandalis_check, pentagon_check, FiniteGroup};
use qfree_core::eigen::hermitian_eigen;
use qfree_core::freeprob::{log_energy, SpectralMeasure};
use qfree_core::pauli::{verify_lemma31_symbolic, Kind};
use qfree_core::repeval::{sample_point, DerivativeEngine};
use std::hint::black_box;

fn symbolic(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_lemma31");
    g.sample_size(10);
    for n in 1..=3 {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| verify_lemma31_symbolic(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn classical(c: &mut Criterion) {
    let engine = DerivativeEngine::new(Kind::Symplectic, 2).unwrap();
    let p = sample_point(2, Kind::Symplectic, 1).unwrap();
    let d = engine.derivative_at(&p).unwrap().f1.d;
    c.bench_function("jacobi_16x16", |b| b.iter(|| hermitian_eigen(black_box(&d)).unwrap()));
    c.bench_function("verify_identity_n2", |b| {
        b.iter(|| engine.verify_identity(black_box(&p), 1e-10).unwrap())
    });
}

fn cayley(c: &mut Criterion) {
    let s4 = FiniteGroup::symmetric(4).unwrap();
    c.bench_function("pentagon_s4", |b| b.iter(|| pentagon_check(black_box(&s4)).unwrap()));
    c.bench_function("baaj_skandalis_s4", |b| {
        b.iter(|| baaj_skandalis_check(black_box(&s4)).unwrap())
    });
}

fn entropy(c: &mut Criterion) {
    let mu = SpectralMeasure::semicircle(1.0, 4000).unwrap();
    c.bench_function("log_energy_4000", |b| b.iter(|| log_energy(black_box(&mu))));
}

criterion_group!(benches, symbolic, classical, cayley, entropy);
criterion_main!(benches);
