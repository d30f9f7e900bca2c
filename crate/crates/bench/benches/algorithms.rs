use criterion::{criterion_group, criterion_main, Criterion};
use tgg_bench::large_growing_cycle;
use tgg_core::{all_distances, nash_diffusion_growing_cycle};

fn bench_growing_cycle_equilibrium(c: &mut Criterion) {
    let g = large_growing_cycle(100_000, 50);
    c.bench_function("growing_cycle_equilibrium_n100k_tau50", |b| {
        b.iter(|| nash_diffusion_growing_cycle(&g).unwrap())
    });
}

fn bench_distance_row(c: &mut Criterion) {
    let g = large_growing_cycle(100_000, 50);
    c.bench_function("distance_row_n100k_tau50", |b| b.iter(|| all_distances(&g, 1).unwrap()));
}

criterion_group!(benches, bench_growing_cycle_equilibrium, bench_distance_row);
criterion_main!(benches);
