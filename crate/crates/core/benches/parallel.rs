//! Rayon's global pool against a one-thread pool on the heavy checks. Build
//! with `--no-default-features` to bench the plain sequential iterators.

use cgybe::arith::{parse_coeff, RingCtx};
use cgybe::dybe::{dybe_check, standard_solution, BetaArgument};
use cgybe::families::{cremmer_gervais, Parameterization};
use cgybe::genfun::{triple_expansion_check, GenFnPair};
use cgybe::tensor::{ybe_check, ybe_check_coefficients};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![("parallel", all), ("sequential", one)]
}

fn braid(c: &mut Criterion) {
    let mut group = c.benchmark_group("ybe_cremmer_gervais");
    group.sample_size(10);
    for n in [4, 5] {
        let rho = cremmer_gervais(n, Parameterization::FormalP).unwrap();
        for (label, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(format!("{label}/compose"), n), &rho, |b, g| {
                b.iter(|| pool.install(|| ybe_check(g).unwrap()))
            });
            group.bench_with_input(BenchmarkId::new(format!("{label}/coefficients"), n), &rho, |b, g| {
                b.iter(|| pool.install(|| ybe_check_coefficients(g).unwrap()))
            });
        }
    }
    group.finish();
}

fn dynamical(c: &mut Criterion) {
    let mut group = c.benchmark_group("dybe_standard");
    group.sample_size(10);
    let r = standard_solution(3, BetaArgument::Transposed).unwrap();
    for (label, pool) in pools() {
        group.bench_function(label, |b| b.iter(|| pool.install(|| dybe_check(&r).unwrap())));
    }
    group.finish();
}

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("triple_expansion_rho1");
    group.sample_size(10);
    let ctx = RingCtx::new(["q", "x"]).unwrap();
    let pair = GenFnPair::new(
        parse_coeff("(q - q^-1)/(1 - x)", &ctx).unwrap(),
        parse_coeff("(q^-1 - q*x)/(1 - x)", &ctx).unwrap(),
    )
    .unwrap();
    for (label, pool) in pools() {
        group.bench_function(label, |b| b.iter(|| pool.install(|| triple_expansion_check(&pair, 4).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, braid, dynamical, expansion);
criterion_main!(benches);
