use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cca_core::cca::{cca_check_with, CcaOptions};
use cca_core::corpus::NON_ALTERNATING_CCA;
use cca_core::{parse_dt, realize_dt, KnotTable};

fn corpus_sweep(c: &mut Criterion) {
    let table = KnotTable::bundled();
    let diagrams: Vec<_> = NON_ALTERNATING_CCA.iter().map(|r| realize_dt(&parse_dt(r.dt).unwrap()).unwrap()).collect();
    let mut group = c.benchmark_group("corpus");
    group.sample_size(20);
    for k in [1, 2, 3] {
        for (label, opts) in [("serial", CcaOptions::serial()), ("parallel", CcaOptions { parallel: true, ..CcaOptions::default() })] {
            group.bench_with_input(BenchmarkId::new(label, k), &k, |b, &k| {
                b.iter(|| {
                    for d in &diagrams {
                        cca_check_with(d, k, table, &opts).unwrap();
                    }
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, corpus_sweep);
criterion_main!(benches);
