use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dendexp_core::{DendElem, Generator, Ring};
use std::hint::black_box;

fn powers(c: &mut Criterion) {
    let x = DendElem::generator(&Generator::named("x"), Ring::Integers);
    let mut group = c.benchmark_group("power_assoc");
    for n in [4, 6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| black_box(&x).power_assoc(n).unwrap())
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let x = DendElem::generator(&Generator::named("x"), Ring::Integers);
    let y = DendElem::generator(&Generator::named("y"), Ring::Integers);
    let a = x.add(&y).unwrap().power_assoc(4).unwrap();
    let b = x.prelie(&y).unwrap().power_assoc(2).unwrap();
    c.bench_function("prec 4x4", |bench| {
        bench.iter(|| black_box(&a).prec(black_box(&b)).unwrap())
    });
    c.bench_function("mul 4x4", |bench| {
        bench.iter(|| black_box(&a).mul(black_box(&b)).unwrap())
    });
    let xs = vec![x.clone(); 5];
    c.bench_function("brace 5", |bench| {
        bench.iter(|| DendElem::brace(black_box(&xs), &y).unwrap())
    });
}

criterion_group!(benches, powers, products);
criterion_main!(benches);
