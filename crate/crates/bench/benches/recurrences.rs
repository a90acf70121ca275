use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use shiftcf_bench::cubic_recurrence;
use shiftcf_core::pi2::{self, Pi2Case};
use shiftcf_core::{
    closed_form_nonhomogeneous, compute_cd, convergents, default_d1, iterate_direct, BigDecimal,
};

const HORIZONS: [usize; 3] = [10, 30, 60];

fn factorization(c: &mut Criterion) {
    let rec = cubic_recurrence();
    let d1 = default_d1(&rec);
    let mut group = c.benchmark_group("compute_cd");
    for n in HORIZONS {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| compute_cd(black_box(&rec), &d1, n).unwrap())
        });
    }
    group.finish();
}

fn solvers(c: &mut Criterion) {
    let rec = cubic_recurrence();
    let d1 = default_d1(&rec);
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for n in HORIZONS {
        let fac = compute_cd(&rec, &d1, n).unwrap();
        group.bench_with_input(BenchmarkId::new("direct", n), &n, |b, &n| {
            b.iter(|| iterate_direct(black_box(&rec), n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| closed_form_nonhomogeneous(black_box(&rec), &fac, n).unwrap())
        });
    }
    group.finish();
}

fn pi_squared(c: &mut Criterion) {
    let tol: BigDecimal = "1e-12".parse().unwrap();
    let mut group = c.benchmark_group("pi2");
    for case in Pi2Case::ALL {
        let cf = case.cf();
        group.bench_function(
            BenchmarkId::new("convergents", case.target_times_pi2()),
            |b| b.iter(|| convergents(black_box(&cf), 100).unwrap()),
        );
        group.bench_function(
            BenchmarkId::new("verify_all", case.target_times_pi2()),
            |b| b.iter(|| pi2::verify_all(case, 60, &tol).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, factorization, solvers, pi_squared);
criterion_main!(benches);
