use chromsym::gfun::PermStats;
use chromsym::modlaw;
use chromsym::oracle::x_colorings;
use chromsym::ptab::{enumerate_pt, s_fun};
use chromsym::{hikita, HessFn, Partition};
use chromsym_bench::{complete, staircase};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn transition_model(c: &mut Criterion) {
    let mut g = c.benchmark_group("p_table");
    for n in [4, 6, 8] {
        let m = staircase(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| hikita::e_total(black_box(m)).unwrap()));
    }
    g.finish();
}

fn permutation_model(c: &mut Criterion) {
    let mut g = c.benchmark_group("g_total");
    for n in [4, 6] {
        let m = staircase(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| PermStats::new(black_box(m)).g_total()));
    }
    g.finish();
}

fn colorings(c: &mut Criterion) {
    let mut g = c.benchmark_group("x_colorings");
    g.sample_size(10);
    for n in [4, 5, 6] {
        let m = staircase(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| x_colorings(black_box(m)).unwrap()));
    }
    g.finish();
}

fn reduction(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduce");
    for n in [5, 7] {
        let m = complete(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| modlaw::reduce(black_box(m)).unwrap()));
    }
    g.finish();
}

fn p_tableaux(c: &mut Criterion) {
    let m: HessFn = "3,4,5,6,7,7,7".parse().unwrap();
    let lambda = Partition::new(vec![3, 2, 2]).unwrap();
    c.bench_function("enumerate_pt/7", |b| b.iter(|| enumerate_pt(black_box(&m), &lambda, false)));
    c.bench_function("s_fun/6", |b| b.iter(|| s_fun(black_box(&staircase(6))).unwrap()));
}

criterion_group!(benches, transition_model, permutation_model, colorings, reduction, p_tableaux);
criterion_main!(benches);
