//! Criterion workloads for the character engine.

use std::hint::black_box;

use bggchar_core::*;
use criterion::{BenchmarkId, Criterion};

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

pub fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("verma_character");
    for (label, depth) in [("A2", 20u64), ("B2", 16), ("G2", 10), ("A3", 8)] {
        let rd = RootDatum::from_label(label).unwrap();
        let lambda = Weight::zero(rd.rank());
        let window = TruncationWindow::new(lambda.clone(), depth);
        group.bench_with_input(BenchmarkId::new(label, depth), &window, |b, win| {
            b.iter(|| verma_character(black_box(&lambda), &rd, win).unwrap())
        });
    }
    group.finish();
}

pub fn weyl(c: &mut Criterion) {
    let mut group = c.benchmark_group("weyl_character");
    for (label, lambda) in [("A2", w(&[6, 6])), ("B3", w(&[2, 2, 2])), ("G2", w(&[4, 4]))] {
        let rd = RootDatum::from_label(label).unwrap();
        group.bench_function(BenchmarkId::new(label, &lambda), |b| {
            b.iter(|| weyl_character(black_box(&lambda), &rd).unwrap())
        });
    }
    group.finish();
}

pub fn simple_chars(c: &mut Criterion) {
    let mut group = c.benchmark_group("simple_char_modular");
    let sl2 = RestrictedCharProvider::sl2(3).unwrap();
    for n in [80i64, -80] {
        let window = TruncationWindow::new(w(&[n]), 200);
        group.bench_function(BenchmarkId::new("A1 p=3", n), |b| {
            b.iter(|| simple_char_modular(black_box(&w(&[n])), 3, &window, None, &sl2).unwrap())
        });
    }
    let a2 = RootDatum::from_label("A2").unwrap();
    let weyl3 = RestrictedCharProvider::weyl(&a2, 3).unwrap();
    let lambda = w(&[7, 5]);
    let window = TruncationWindow::new(lambda.clone(), 8);
    group.bench_function("A2 p=3 (7,5)", |b| {
        b.iter(|| simple_char_modular(black_box(&lambda), 3, &window, None, &weyl3).unwrap())
    });
    group.finish();
}

pub fn rank_one(c: &mut Criterion) {
    let p3 = Regime::Modular { p: 3 };
    c.bench_function("ledger n=0 p=3 cutoff=-2000", |b| {
        b.iter(|| sl2_composition_factors(black_box(0), &p3, -2000).unwrap())
    });
    c.bench_function("reciprocity sweep p=5", |b| {
        let regime = Regime::Modular { p: 5 };
        b.iter(|| {
            (-1..25)
                .flat_map(|l| (0..40).map(move |j| (l, l - 2 * j)))
                .filter(|&(l, m)| sl2_reciprocity_check(l, m, &regime).unwrap().equal)
                .count()
        })
    });
    c.bench_function("linkage downset G2 depth 8", |b| {
        let rd = RootDatum::from_label("G2").unwrap();
        let lambda = rd.rho().scaled(3);
        let window = TruncationWindow::new(lambda.clone(), 8);
        b.iter(|| linkage_downset(black_box(&lambda), 3, &rd, &window).unwrap())
    });
}
