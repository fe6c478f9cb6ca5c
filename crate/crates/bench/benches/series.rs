use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use macdo_core::algebra::{pochhammer, Grading, LaurentPoly, SeriesSpace};
use macdo_core::identities::{self, Identity, Params};
use macdo_core::vcoding::{codings_up_to, Family};
use std::hint::black_box;

fn space(t_cap: u32, q_cap: u32) -> SeriesSpace {
    SeriesSpace::new(vec![Grading::new("T", t_cap, 1), Grading::new("q", q_cap, 1)], &["u"])
}

fn series_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for cap in [6, 10] {
        let s = space(cap, cap);
        let u = LaurentPoly::var(1, 0, 1);
        let a = pochhammer(&s, &u, [1, 0], [1, 1]).unwrap();
        let b = pochhammer(&s, &u.invert_var(0), [1, 1], [1, 0]).unwrap();
        group.bench_with_input(BenchmarkId::new("mul", cap), &cap, |bench, _| {
            bench.iter(|| black_box(a.mul(&b)))
        });
        group.bench_with_input(BenchmarkId::new("mul_binomial", cap), &cap, |bench, _| {
            bench.iter(|| {
                let mut x = a.clone();
                x.mul_binomial(&u, [1, 1], -3).unwrap();
                black_box(x)
            })
        });
        group.bench_with_input(BenchmarkId::new("inverse", cap), &cap, |bench, _| {
            bench.iter(|| black_box(a.inverse().unwrap()))
        });
    }
    group.finish();
}

fn codings(c: &mut Criterion) {
    let mut group = c.benchmark_group("codings_up_to");
    for t in 1..=3 {
        group.bench_with_input(BenchmarkId::new("dd_w60", t), &t, |bench, &t| {
            bench.iter(|| black_box(codings_up_to(Family::Dd, t, 60)))
        });
    }
    group.finish();
}

fn verifiers(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let runs = [
        (Identity::Hande, Params { t_cap: Some("3".parse().unwrap()), q_cap: Some(6), ..Params::default() }),
        (Identity::Thm11, Params { t: Some(2), t_cap: Some("4".parse().unwrap()), ..Params::default() }),
        (Identity::TauProduct, Params { t: Some(1), max_core_weight: Some(40), ..Params::default() }),
    ];
    for (id, params) in runs {
        group.bench_function(format!("{}_{}", id.name(), params.slug()), |bench| {
            bench.iter(|| black_box(identities::run(id, &params).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, series_products, codings, verifiers);
criterion_main!(benches);
