use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fiberscope_core::fiber_tree::{sample_fiber, StarFiberProblem};
use fiberscope_core::homology::{betti, order_complex};
use fiberscope_core::persistence::sublevel_ph0;
use fiberscope_core::strings::enumerate_strings;
use fiberscope_core::{int, Shape, VertexFunction};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_strings");
    for (n, m) in [(8, 1), (9, 2), (12, 3)] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{n},{m}")),
            &(n, m),
            |b, &(n, m)| b.iter(|| enumerate_strings(black_box(n), black_box(m)).unwrap()),
        );
    }
    g.finish();
}

fn homology(c: &mut Criterion) {
    let mut g = c.benchmark_group("betti");
    g.sample_size(10);
    for (n, m) in [(7, 2), (8, 1)] {
        let poset = enumerate_strings(n, m).unwrap().to_finite_poset();
        g.bench_with_input(
            BenchmarkId::new("Str", format!("{n},{m}")),
            &poset,
            |b, p| b.iter(|| betti(&order_complex(p).unwrap())),
        );
    }
    g.finish();
}

fn persistence(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut g = c.benchmark_group("sublevel_ph0");
    for n in [16usize, 256, 4096] {
        let mut values: Vec<i64> = (0..n as i64).collect();
        values.shuffle(&mut rng);
        let z =
            VertexFunction::on(&Shape::Cycle(n), values.into_iter().map(int).collect()).unwrap();
        g.bench_with_input(BenchmarkId::new("cycle", n), &z, |b, z| {
            b.iter(|| sublevel_ph0(z).unwrap())
        });
    }
    g.finish();
}

fn sampling(c: &mut Criterion) {
    let p = StarFiberProblem::new(&[2, 2, 2, 2]).unwrap();
    c.bench_function("sample_fiber/star4/1000", |b| {
        b.iter(|| sample_fiber(&p, 1000, black_box(9)).unwrap())
    });
}

criterion_group!(benches, enumerate, homology, persistence, sampling);
criterion_main!(benches);
