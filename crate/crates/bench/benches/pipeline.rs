//! Benchmarks of the hot paths: parsing and validation, rewriting, fiber
//! analysis, minor enumeration, and Cayley-Hamilton verification, all on
//! the rank-9 corpus entry.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fiberlab_core::cayley::{
    modified_discriminant_ideal, regular_trace_over_c, verify_cayley_hamilton,
};
use fiberlab_core::findim::analyze;
use fiberlab_core::presentation::{parse_presentation, CentralCharacter, NCPoly};

const TAFT3: &str = include_str!("../../../corpus/taft_inf_3.hopf");

fn bench_pipeline(c: &mut Criterion) {
    let pres = parse_presentation(TAFT3).unwrap();
    let td = regular_trace_over_c(&pres).unwrap();

    c.bench_function("parse_validate_taft3", |b| {
        b.iter(|| parse_presentation(black_box(TAFT3)).unwrap())
    });

    c.bench_function("normal_form_long_word", |b| {
        // x g x g x g x g reduces through every rule
        let word = vec![1u32, 0, 1, 0, 1, 0, 1, 0];
        let e = NCPoly::from_word(word, &pres.central);
        b.iter(|| pres.normal_form(black_box(&e), None).unwrap())
    });

    c.bench_function("fiber_analyze_identity", |b| {
        let id = CentralCharacter::identity(&pres.central);
        b.iter(|| {
            let alg = pres.build_fiber(black_box(&id)).unwrap();
            analyze(alg, 0).unwrap()
        })
    });

    c.bench_function("minors_md5_taft3", |b| {
        b.iter(|| modified_discriminant_ideal(black_box(&td), 5).unwrap())
    });

    c.bench_function("cayley_hamilton_10_samples", |b| {
        b.iter(|| verify_cayley_hamilton(black_box(&pres), &td, 9, 10, 0).unwrap())
    });
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);
