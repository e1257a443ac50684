use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use frobgrann_core::lab::{build_counterexample, graded_annihilator, special_ideal_lattice};
use frobgrann_core::module::{frobenius_root, FrobeniusModule, ProductModule, SplitModule};
use frobgrann_core::{Ideal, MonomialOrder, RingSpec};

fn groebner(c: &mut Criterion) {
    let lex = RingSpec::new(3, ["t1", "t2"], MonomialOrder::Lex).unwrap();
    c.bench_function("groebner/lex_f3_two_generators", |b| {
        b.iter(|| {
            let i = Ideal::parse(&lex, &["t1^2 - t2", "t1*t2 - t1"]).unwrap();
            black_box(i.groebner_basis().unwrap().len())
        })
    });
    let r = RingSpec::standard(2, 3).unwrap();
    c.bench_function("groebner/grevlex_f2_three_vars", |b| {
        b.iter(|| {
            let i = Ideal::parse(
                &r,
                &[
                    "t1^2*t2 + t3 + 1",
                    "t1*t2^2 + t1 + t3",
                    "t1*t2*t3 + t2^2 + 1",
                ],
            )
            .unwrap();
            black_box(i.groebner_basis().unwrap().len())
        })
    });
    c.bench_function("groebner/intersection", |b| {
        let i = Ideal::parse(&r, &["t1*t2", "t3^2"]).unwrap();
        let j = Ideal::parse(&r, &["t1 + t3", "t2^3"]).unwrap();
        b.iter(|| black_box(i.intersection(&j).unwrap()))
    });
}

fn frobenius(c: &mut Criterion) {
    let r = RingSpec::standard(3, 3).unwrap();
    let n = Ideal::parse(&r, &["t1^4*t2 + t3^3", "t2^5 + t1*t3"]).unwrap();
    c.bench_function("frobenius_root/p3_three_vars", |b| {
        b.iter(|| black_box(frobenius_root(&n).unwrap()))
    });
}

fn special(c: &mut Criterion) {
    let m = build_counterexample(2, 4).unwrap();
    let primes = m.prime_universe();
    c.bench_function("special_submodule/counterexample_n4_all_primes", |b| {
        b.iter(|| {
            for p in &primes {
                black_box(m.special_submodule(p).unwrap());
            }
        })
    });
    let r = RingSpec::standard(3, 2).unwrap();
    let whole = SplitModule::whole(&r);
    let n = Ideal::parse(&r, &["t1*t2"]).unwrap();
    c.bench_function("graded_annihilator/p3_horizon", |b| {
        b.iter(|| black_box(graded_annihilator(&whole, &n).unwrap()))
    });
}

fn lattice(c: &mut Criterion) {
    let m = SplitModule::whole(&RingSpec::standard(2, 3).unwrap());
    c.bench_function("lattice/f2_three_vars", |b| {
        b.iter(|| {
            black_box(
                special_ideal_lattice(&m, &m.prime_universe())
                    .unwrap()
                    .len(),
            )
        })
    });
    let pm = ProductModule::identity(2, 5).unwrap();
    c.bench_function("lattice/product_k5", |b| {
        b.iter(|| {
            black_box(
                special_ideal_lattice(&pm, &pm.prime_universe())
                    .unwrap()
                    .len(),
            )
        })
    });
}

criterion_group!(benches, groebner, frobenius, special, lattice);
criterion_main!(benches);
