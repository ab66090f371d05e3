use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superdual_core::oscillator::{capelli_identity_check, gram_positivity, tensor_decompose};
use superdual_core::rational::{q, qf};
use superdual_core::tables::{doubleton, Doubleton};
use superdual_core::{build_weight_lattice, classify_supqm, plaquette_check, weight_from_label, Grading, RepLabel};

fn label(p: usize, q_: usize, m: usize, ml: &[u32], t: &[u32], mr: &[u32], bl: i64, br: i64) -> RepLabel {
    RepLabel::new(p, q_, m, ml.to_vec(), t.to_vec(), mr.to_vec(), q(bl), q(br)).unwrap()
}

fn gram(c: &mut Criterion) {
    let short = label(1, 1, 1, &[0], &[0], &[0], 0, 0);
    let long = RepLabel::new(0, 2, 2, vec![], vec![1, 0], vec![0, 0], q(0), qf(5, 2)).unwrap();
    c.bench_function("gram su(1,1|1) short cutoff 4", |b| b.iter(|| gram_positivity(black_box(&short), 4).unwrap()));
    c.bench_function("gram su(2|2) long cutoff 3", |b| b.iter(|| gram_positivity(black_box(&long), 3).unwrap()));
    c.bench_function("capelli P=2 cutoff 3", |b| b.iter(|| capelli_identity_check(2, black_box(&qf(1, 2)), 3)));
}

fn lattice(c: &mut Criterion) {
    let l = label(2, 2, 4, &[3, 0], &[2, 1, 1, 0], &[2, 0], 3, 2);
    let g = Grading::from_blocks(&[(1, 0, 0), (2, 1, 1), (1, 0, 0), (2, 1, 1), (2, 0, 1)]).unwrap();
    let w = weight_from_label(&l, &g, true).unwrap();
    c.bench_function("lattice su(2,2|4)", |b| b.iter(|| plaquette_check(&build_weight_lattice(black_box(&w)).unwrap())));
    c.bench_function("classify su(2,2|4)", |b| b.iter(|| classify_supqm(black_box(&l))));
}

fn tensor(c: &mut Criterion) {
    let (_, a) = doubleton(Doubleton::A(3)).unwrap();
    let (_, f) = doubleton(Doubleton::F2).unwrap();
    c.bench_function("tensor (a†)^3 Δ† x ff", |b| b.iter(|| tensor_decompose(black_box(&a), black_box(&f)).unwrap()));
}

criterion_group!(benches, gram, lattice, tensor);
criterion_main!(benches);
