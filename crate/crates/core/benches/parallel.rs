//! Default rayon pool against a single-thread pool on the data-parallel
//! kernels. Build with `--no-default-features` to time the plain
//! sequential code instead; both variants then measure the same thing.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;
use verbalis::group::{alternating, cyclic, direct_product, symmetric};
use verbalis::srank::{count_quotients_brute, count_quotients_via_series};
use verbalis::towers::{fingerprint, tower_from_family, FamilySpec};
use verbalis::words::value_set;
use verbalis::{Caps, GroupSpec, Word};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("default", ThreadPoolBuilder::new().build().unwrap()),
        ("one-thread", ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
    ]
}

fn bench_value_set(c: &mut Criterion) {
    let caps = Caps::default();
    let g = symmetric(4).unwrap();
    let w = Word::parse("[x,y]*z^2").unwrap();
    let mut group = c.benchmark_group("value_set S4 [x,y]z^2");
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            pool.install(|| b.iter(|| value_set(black_box(&w), &g, &caps).unwrap()))
        });
    }
    group.finish();
}

fn bench_count_quotients(c: &mut Criterion) {
    let caps = Caps::default();
    let g = direct_product(&symmetric(3).unwrap(), &alternating(4).unwrap());
    let f = cyclic(3).unwrap();
    let mut group = c.benchmark_group("count_quotients S3xA4 onto C3");
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::new("series", label), |b| {
            pool.install(|| b.iter(|| count_quotients_via_series(black_box(&g), &f, &caps).unwrap()))
        });
        group.bench_function(BenchmarkId::new("brute", label), |b| {
            pool.install(|| b.iter(|| count_quotients_brute(black_box(&g), &f, &caps).unwrap()))
        });
    }
    group.finish();
}

fn bench_fingerprint(c: &mut Criterion) {
    let caps = Caps::default();
    let family = FamilySpec::Product {
        factors: vec![FamilySpec::Constant { group: GroupSpec::named("S", 3) }, FamilySpec::PowerZp { p: 2 }],
        support: None,
    };
    let t = tower_from_family(&family, 2, &caps).unwrap();
    let mut group = c.benchmark_group("fingerprint S3xZ2^2 depth 2");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            pool.install(|| b.iter(|| fingerprint(black_box(&t), 24, &caps).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_value_set, bench_count_quotients, bench_fingerprint);
criterion_main!(benches);
