use criterion::{criterion_group, criterion_main, Criterion};
use hhc_bench::{algebra, half_rank};
use hhc_core::cyclic::{hochschild_complex, CyclicData, CyclicModule};
use hhc_core::lambda::eulerian_idempotents;
use hhc_core::lie::lie_homology_dims;
use hhc_core::linalg::rank;
use std::hint::black_box;

fn hochschild(c: &mut Criterion) {
    let mut g = c.benchmark_group("hochschild");
    g.sample_size(10);
    for (name, top) in [("dualnum", 6), ("trunc3", 5), ("m2", 4)] {
        let a = algebra(name);
        g.bench_function(format!("HH {name} top {top}"), |b| {
            b.iter(|| hochschild_complex(&CyclicModule::new(a.clone(), top, 50_000).unwrap()).unwrap().homologies().unwrap())
        });
    }
    g.finish();
}

fn cyclic(c: &mut Criterion) {
    let mut g = c.benchmark_group("cyclic");
    g.sample_size(10);
    for name in ["dualnum", "sqzero2"] {
        let a = algebra(name);
        g.bench_function(format!("three routes {name} top 4"), |b| {
            b.iter(|| {
                let d = CyclicData::new(a.clone(), 4, 5000).unwrap();
                (d.tot.complex.homologies().unwrap(), d.connes.homologies().unwrap())
            })
        });
    }
    g.finish();
}

fn eulerian(c: &mut Criterion) {
    let mut g = c.benchmark_group("eulerian");
    g.sample_size(10);
    for d in [2, 3] {
        g.bench_function(format!("idempotents d={d} top 4"), |b| b.iter(|| eulerian_idempotents(black_box(d), 4, 5000).unwrap()));
    }
    g.finish();
}

fn lie(c: &mut Criterion) {
    let mut g = c.benchmark_group("lie");
    g.sample_size(10);
    let a = algebra("dualnum");
    g.bench_function("CE gl2(dualnum) top 3", |b| b.iter(|| lie_homology_dims(&a, 2, 3, 5000, false).unwrap()));
    g.bench_function("CL gl1(dualnum) top 4", |b| b.iter(|| lie_homology_dims(&a, 1, 4, 5000, true).unwrap()));
    g.finish();
}

fn linalg(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for n in [32, 96] {
        let m = half_rank(n);
        g.bench_function(format!("dense {n}x{n}"), |b| b.iter(|| rank(black_box(&m))));
    }
    g.finish();
}

criterion_group!(benches, hochschild, cyclic, eulerian, lie, linalg);
criterion_main!(benches);
