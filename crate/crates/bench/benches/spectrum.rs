use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclotope::{
    inverse_rows, spectrum_dense_with, spectrum_fast, spectrum_intervals, spectrum_update,
    GroundSubset,
};
use cyclotope_bench::{seeded_tope, DIMENSIONS};

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for &t in &DIMENSIONS {
        let tope = seeded_tope(t, 7);
        let inverse = inverse_rows(t).unwrap();
        group.bench_with_input(BenchmarkId::new("dense", t), &tope, |b, tope| {
            b.iter(|| spectrum_dense_with(tope, &inverse).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fast", t), &tope, |b, tope| {
            b.iter(|| spectrum_fast(tope))
        });
        group.bench_with_input(BenchmarkId::new("intervals", t), &tope, |b, tope| {
            b.iter(|| spectrum_intervals(tope))
        });
    }
    group.finish();
}

fn single_flip_update(c: &mut Criterion) {
    let t = 1 << 16;
    let tope = seeded_tope(t, 11);
    let x = spectrum_fast(&tope);
    let flip = GroundSubset::new(t, [t / 2]).unwrap();
    c.bench_function("update/single-flip/65536", |b| {
        b.iter(|| spectrum_update(&x, &tope, &flip).unwrap())
    });
}

criterion_group!(benches, spectra, single_flip_update);
criterion_main!(benches);
