use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use miquel_bench::{inner_point, scalene};
use miquel_core::chains::{self, ThetaSchedule};
use miquel_core::{centers, miquel, verify, DirectedAngle, Triad};

fn kernel(c: &mut Criterion) {
    let t = scalene();
    let p = inner_point();
    let triad = Triad::new(t, 0.3, 0.45, 0.6).unwrap();
    c.bench_function("miquel_point", |b| b.iter(|| miquel::miquel_point(black_box(&triad)).unwrap()));
    c.bench_function("pedal_triangle", |b| b.iter(|| miquel::pedal_triangle(black_box(&t), black_box(p)).unwrap()));
    c.bench_function("family_member", |b| {
        b.iter(|| miquel::family_member(black_box(&t), black_box(p), DirectedAngle::new(0.4)).unwrap())
    });
}

fn centers_and_catalog(c: &mut Criterion) {
    let t = scalene();
    let p = inner_point();
    c.bench_function("eleven_point_catalog", |b| b.iter(|| centers::eleven_point_catalog(black_box(&t)).unwrap()));
    c.bench_function("isogonal_conjugate", |b| b.iter(|| centers::isogonal_conjugate(black_box(&t), black_box(p)).unwrap()));
    c.bench_function("detect_special_role", |b| b.iter(|| miquel::detect_special_role(black_box(&t), black_box(p), 1e-6)));
}

fn chain(c: &mut Criterion) {
    let t = scalene();
    let p = inner_point();
    c.bench_function("iterate_chain_9", |b| {
        b.iter(|| chains::iterate_chain(black_box(&t), black_box(p), 9, &ThetaSchedule::Pedal).unwrap())
    });
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("concurrency", |b| b.iter(|| verify::run_suite("concurrency", 7, None).unwrap()));
    group.bench_function("all", |b| b.iter(|| verify::run_suite("all", 7, None).unwrap()));
    group.finish();
}

criterion_group!(benches, kernel, centers_and_catalog, chain, suites);
criterion_main!(benches);
