use abshift::thermo::{self, Potential};
use abshift::{criterion as obstruction, surgery};
use abshift_bench::{pair_potential, reference_shift};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pressure(c: &mut Criterion) {
    let shift = reference_shift();
    let phi = pair_potential(3);
    let mut group = c.benchmark_group("pressure_estimate");
    for n in [5usize, 20, 80] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| thermo::pressure_estimate(&shift, &phi, n).unwrap().value)
        });
    }
    group.finish();
}

fn cylinder(c: &mut Criterion) {
    let shift = reference_shift();
    let zero = Potential::zero(3);
    c.bench_function("cylinder_estimate n=12", |b| {
        b.iter(|| thermo::cylinder_estimate(&shift, &zero, &[3, 3], 12).unwrap())
    });
}

fn surgery_sweep(c: &mut Criterion) {
    let shift = reference_shift();
    c.bench_function("multiplicity_profile n=9", |b| {
        b.iter(|| surgery::multiplicity_profile(&shift, 9).unwrap().max_tilde)
    });
}

fn zbar(c: &mut Criterion) {
    let shift = reference_shift();
    c.bench_function("zbar_series horizon 200", |b| {
        b.iter(|| {
            obstruction::zbar_series(&shift, 200)
                .unwrap()
                .last_quartile_max_ratio
        })
    });
}

criterion_group!(benches, pressure, cylinder, surgery_sweep, zbar);
criterion_main!(benches);
