use criterion::{criterion_group, criterion_main, Criterion};
use orbit_fusion::{FusionTable, Params};
use std::hint::black_box;

fn bench_table(c: &mut Criterion) {
    let params = Params::new(3, 4).unwrap();
    c.bench_function("fusion/table su(3) k=4", |bench| {
        bench.iter(|| FusionTable::new(black_box(params)))
    });

    let table = FusionTable::new(params);
    let ws = table.weights().to_vec();
    c.bench_function("fusion/all coefficients su(3) k=4", |bench| {
        bench.iter(|| {
            let mut total = 0u64;
            for l in &ws {
                for m in &ws {
                    for n in &ws {
                        total += table.coefficient(l, m, n).unwrap().value;
                    }
                }
            }
            total
        })
    });
}

criterion_group!(benches, bench_table);
criterion_main!(benches);
