use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use matverify::certificate::verifies_cuts;
use matverify::fixtures;
use matverify::online::{run_promise, QueryEnvironment};
use matverify::oracle::min_cost_certificate;
use matverify::selection::run_algorithm1;
use matverify::synthesis::algorithm2;
use matverify_bench::{graphic, uniform};

fn synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("algorithm2");
    for edges in [10, 20, 40] {
        let inst = graphic(1, edges / 2, edges);
        group.bench_with_input(BenchmarkId::new("graphic", edges), &inst, |b, inst| {
            b.iter(|| algorithm2(black_box(inst)).unwrap())
        });
    }
    for n in [10, 20, 40] {
        let inst = uniform(2, n, n / 2);
        group.bench_with_input(BenchmarkId::new("uniform", n), &inst, |b, inst| {
            b.iter(|| algorithm2(black_box(inst)).unwrap())
        });
    }
    group.finish();
}

fn checking(c: &mut Criterion) {
    let inst = graphic(3, 15, 40);
    let cert = algorithm2(&inst).unwrap();
    c.bench_function("verifies_cuts/graphic-40", |b| {
        b.iter(|| verifies_cuts(black_box(&inst), &cert.query.elements, &cert.basis).unwrap())
    });
}

fn online(c: &mut Criterion) {
    let inst = graphic(4, 15, 40).with_unit_costs();
    let (basis, _) = run_algorithm1(&inst).unwrap();
    c.bench_function("run_promise/graphic-40", |b| {
        b.iter(|| {
            let mut env = QueryEnvironment::new(&inst);
            run_promise(&mut env, black_box(&basis)).unwrap()
        })
    });
}

fn oracle(c: &mut Criterion) {
    let fig2 = fixtures::fig2();
    c.bench_function("min_cost_certificate/fig2", |b| {
        b.iter(|| min_cost_certificate(black_box(&fig2)).unwrap())
    });
    let inst = graphic(5, 5, 10);
    c.bench_function("min_cost_certificate/graphic-10", |b| {
        b.iter(|| min_cost_certificate(black_box(&inst)).unwrap())
    });
}

criterion_group!(benches, synthesis, checking, online, oracle);
criterion_main!(benches);
