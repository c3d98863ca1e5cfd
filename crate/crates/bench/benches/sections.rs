use criterion::{black_box, criterion_group, criterion_main, Criterion};
use veerlat::pocket::{pivot_annuli, theorem_checks, CheckOptions};
use veerlat::section::{bottom_of, top_of};
use veerlat::veering::MonodromySpec;
use veerlat::veering::VeeringComplex;
use veerlat_bench::{complex, edge_sets, section_pairs};

fn build(cr: &mut Criterion) {
    for w in ["R^6L", "R^50L", "RLRRLLRRRL"] {
        let spec = MonodromySpec::word(w);
        cr.bench_function(&format!("build {w}"), |b| b.iter(|| VeeringComplex::build(black_box(&spec)).unwrap()));
    }
}

fn lattice(cr: &mut Criterion) {
    let c = complex("R^6L");
    let pairs = section_pairs(&c, 64);
    cr.bench_function("join+meet R^6L", |b| {
        b.iter(|| {
            for (s, t) in &pairs {
                black_box(s.join(t));
                black_box(s.meet(t));
            }
        })
    });
}

fn extremes(cr: &mut Criterion) {
    let c = complex("R^6L");
    let sets = edge_sets(&c, 32);
    cr.bench_function("top_of R^6L", |b| b.iter(|| sets.iter().for_each(|e| drop(black_box(top_of(&c, e).unwrap()))))));
    cr.bench_function("bottom_of R^6L", |b| b.iter(|| sets.iter().for_each(|e| drop(black_box(bottom_of(&c, e).unwrap()))))));
}

fn checks(cr: &mut Criterion) {
    let c = complex("R^4L");
    let ys = pivot_annuli(&c).unwrap();
    let mut g = cr.benchmark_group("theorems");
    g.sample_size(10);
    g.bench_function("theorem_checks R^4L", |b| b.iter(|| theorem_checks(&c, &ys, CheckOptions::default())));
    g.finish();
}

criterion_group!(benches, build, lattice, extremes, checks);
criterion_main!(benches);
