use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use noninertial_core::linalg::eigh;
use noninertial_core::{
    alice_rob_state, discord, kron, run_protocol, run_sweep, werner, ComplexMatrix, OutputFlags, PureQubit,
    RindlerParam, Side, SweepSpec, WernerParams,
};

fn channel() -> noninertial_core::DensityMatrix {
    alice_rob_state(WernerParams::new(0.8).unwrap(), RindlerParam::new(0.5).unwrap())
}

fn linalg(c: &mut Criterion) {
    let rho = werner(WernerParams::new(0.6).unwrap());
    let joint = kron(
        &PureQubit::from_population(0.3, 0.7)
            .unwrap()
            .density()
            .into_matrix(),
        rho.matrix(),
    );
    c.bench_function("eigh 8x8", |b| b.iter(|| eigh(black_box(&joint)).unwrap()));
    let a = ComplexMatrix::identity(4);
    c.bench_function("kron 4x4 (x) 2x2", |b| {
        b.iter(|| kron(black_box(&a), black_box(&ComplexMatrix::identity(2))))
    });
}

fn protocol(c: &mut Criterion) {
    let ch = channel();
    let psi = PureQubit::from_population(0.7, 0.4).unwrap();
    c.bench_function("run_protocol", |b| {
        b.iter(|| run_protocol(black_box(&psi), black_box(&ch)).unwrap())
    });
}

fn measures(c: &mut Criterion) {
    let ch = channel();
    c.bench_function("discord (64x64 grid + simplex)", |b| {
        b.iter(|| discord(black_box(&ch)))
    });
}

fn sweep(c: &mut Criterion) {
    let mut spec = SweepSpec::figure_with_points(noninertial_core::Figure::MaximallyEntangled, 9);
    spec.outputs = OutputFlags::with_sides(&[Side::B]);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("figure 2, 9 points", |b| {
        b.iter(|| run_sweep(black_box(&spec)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, linalg, protocol, measures, sweep);
criterion_main!(benches);
