use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orbit_fusion::{make_label, product, run_scan, Method, Params, ScanKind, ScanSpec};
use std::hint::black_box;

fn bench_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("product");
    // Trivial stabilizer: the list method sees every element of [b].
    let params = Params::new(4, 6).unwrap();
    let a = make_label(params, vec![2, 2, 1, 1]).unwrap();
    let b = make_label(params, vec![1, 2, 2, 1]).unwrap();
    for method in Method::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(method), &method, |bench, &m| {
            bench.iter(|| product(black_box(&a), black_box(&b), m).unwrap())
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let spec = ScanSpec::new(ScanKind::MultiplicityFree, 4, 5).unwrap();
    c.bench_function("scan/multiplicity-free N=4 k<=5", |bench| {
        bench.iter(|| run_scan(black_box(&spec)).unwrap())
    });
}

criterion_group!(benches, bench_methods, bench_scan);
criterion_main!(benches);
