use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sadic_core::bratteli::{build_diagram, equivariance_check, PathPrefix};
use sadic_core::language::{prune_to_biextendable, substitutive_factors};
use sadic_core::point::apply_to_point;
use sadic_core::recognizer::{mosse_search, point_parses, window_parses};
use sadic_core::{presets, DirectiveSequence, EventuallyPeriodicPoint, Letter, Morphism, Word};

fn fixed_prefix(m: &Morphism, len: usize) -> Word {
    let mut w: Word = vec![0 as Letter];
    while w.len() < len {
        w = m.apply(&w).unwrap();
    }
    w.truncate(len);
    w
}

fn window_parsing(c: &mut Criterion) {
    for (name, m) in [("fibonacci", presets::fibonacci()), ("thue-morse", presets::thue_morse())] {
        let w = fixed_prefix(&m, 64);
        let lang = substitutive_factors(&m, 64).unwrap();
        c.bench_function(&format!("window_parses/{name}/64"), |b| b.iter(|| window_parses(black_box(&w), &m, None)));
        c.bench_function(&format!("window_parses/{name}/64/language"), |b| {
            b.iter(|| window_parses(black_box(&w), &m, Some(&lang)))
        });
    }
}

fn point_parsing(c: &mut Criterion) {
    let m = presets::remark22();
    let x = EventuallyPeriodicPoint::with_center_start(vec![0], fixed_prefix(&m, 48), vec![1], -24).unwrap();
    let y = apply_to_point(&m, &x);
    c.bench_function("point_parses/remark22", |b| b.iter(|| point_parses(black_box(&y), &m, None)));
}

fn mosse(c: &mut Criterion) {
    let mut g = c.benchmark_group("mosse_search");
    g.sample_size(10);
    for (name, m) in [("fibonacci", presets::fibonacci()), ("thue-morse", presets::thue_morse()), ("remark22", presets::remark22())] {
        let lang = prune_to_biextendable(&substitutive_factors(&m, 128).unwrap());
        g.bench_function(name, |b| b.iter(|| mosse_search(&m, black_box(&lang), 30)));
    }
    g.finish();
}

fn equivariance(c: &mut Criterion) {
    let d = DirectiveSequence::stationary(presets::fibonacci()).unwrap();
    let b = build_diagram(&d, 17).unwrap();
    let p = PathPrefix::minimal(&b, 16, 0).unwrap();
    let mut g = c.benchmark_group("equivariance_check");
    g.sample_size(10);
    g.bench_function("fibonacci/depth16/1000", |bn| bn.iter(|| equivariance_check(&d, black_box(&p), 1000)));
    g.finish();
}

criterion_group!(benches, window_parsing, point_parsing, mosse, equivariance);
criterion_main!(benches);
