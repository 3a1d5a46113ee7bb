use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dopekit::enumerate::{enumerate_dope, enumerate_generic};
use dopekit::{build_forms, linalg, ExactMatrix};
use dopekit_bench::table_tuples;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_dope");
    group.sample_size(10);
    for (name, lambda) in table_tuples() {
        group.bench_with_input(BenchmarkId::new(name, 4), &lambda, |b, l| b.iter(|| enumerate_dope(l, 4).unwrap().len()));
    }
    group.bench_function("generic m=3 n=4", |b| b.iter(|| enumerate_generic(3, 4).unwrap().len()));
    group.finish();
}

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for (name, lambda) in table_tuples() {
        let forms = build_forms(&lambda, 6).unwrap();
        let rows: Vec<_> = forms.grid().positions().map(|p| forms.form(p).to_vec()).collect();
        let m = ExactMatrix::from_rows(forms.field(), rows).unwrap();
        group.bench_function(name, |b| b.iter(|| linalg::rank(black_box(&m))));
    }
    group.finish();
}

criterion_group!(benches, enumeration, rank);
criterion_main!(benches);
