use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gtg_bench::table1_words;
use gtg_core::smallcancel::{find_decomposition, Constraints, PieceIndex};
use gtg_core::trace::{sup_check, trace_coeffs_i64};
use gtg_core::trace_poly;

fn traces(c: &mut Criterion) {
    let words = table1_words();
    c.bench_function("trace_poly/all reference words", |b| {
        b.iter(|| {
            words
                .iter()
                .map(|w| trace_poly(black_box(w)).unwrap().degree())
                .sum::<Option<usize>>()
        })
    });
    c.bench_function("trace_coeffs_i64/all reference words", |b| {
        b.iter(|| {
            words
                .iter()
                .filter_map(|w| trace_coeffs_i64(black_box(w.alphas())))
                .count()
        })
    });
    let longest = words.iter().max_by_key(|w| w.len()).unwrap().clone();
    c.bench_function("sup_check/longest reference word", |b| {
        b.iter(|| sup_check(black_box(&longest), 1000))
    });
}

fn pieces(c: &mut Criterion) {
    let words = table1_words();
    c.bench_function("piece_index/all reference words", |b| {
        b.iter(|| {
            words
                .iter()
                .map(|w| PieceIndex::new(black_box(w)).pieces().len())
                .sum::<usize>()
        })
    });
    c.bench_function("find_decomposition/all reference words", |b| {
        b.iter(|| {
            words
                .iter()
                .filter(|w| find_decomposition(black_box(w), Constraints::default()).is_some())
                .count()
        })
    });
}

criterion_group!(benches, traces, pieces);
criterion_main!(benches);
