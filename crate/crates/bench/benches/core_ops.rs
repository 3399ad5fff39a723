use criterion::{criterion_group, criterion_main, Criterion};
use vnum_core::config::Caps;
use vnum_core::field::{Fp, DEFAULT_PRIME};
use vnum_core::graph::Graph;
use vnum_core::ideals::BinomialEdgeIdeal;
use vnum_core::regularity::reg_monomial;
use vnum_core::vnum::VnumEngine;

fn bench_groebner(c: &mut Criterion) {
    c.bench_function("groebner_c7", |b| {
        b.iter(|| {
            let ideal = BinomialEdgeIdeal::new(Graph::cycle(7), Fp::new(1, DEFAULT_PRIME));
            ideal.groebner_basis(&Caps::default()).unwrap().len()
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("v_oracle_c6", |b| {
        b.iter(|| {
            let engine = VnumEngine::new(Graph::cycle(6), Caps::default()).unwrap();
            engine.v_oracle(Some(4)).unwrap().global
        })
    });
}

fn bench_regularity(c: &mut Criterion) {
    c.bench_function("reg_monomial_p5", |b| {
        let g = Graph::path(5);
        let gens: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                vnum_core::poly::Monomial::var(u - 1, g.n())
                    .mul(&vnum_core::poly::Monomial::var(v - 1, g.n()))
            })
            .collect();
        b.iter(|| reg_monomial(g.n(), &gens, &Caps::default()).unwrap())
    });
}

criterion_group!(benches, bench_groebner, bench_oracle, bench_regularity);
criterion_main!(benches);
