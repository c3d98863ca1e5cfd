//! Fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use veerlat::section::{random_disjoint_edges, random_section, Section};
use veerlat::veering::{MonodromySpec, VeeringComplex};

pub fn complex(word: &str) -> VeeringComplex {
    VeeringComplex::build(&MonodromySpec::word(word)).expect("benchmark words are veerable")
}

/// `n` seeded random section pairs near layer 0.
pub fn section_pairs(c: &VeeringComplex, n: usize) -> Vec<(Section, Section)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..n).map(|_| (random_section(c, &mut rng, 0, 12), random_section(c, &mut rng, 1, 12))).collect()
}

/// `n` seeded disjoint edge sets near layer 0.
pub fn edge_sets(c: &VeeringComplex, n: usize) -> Vec<BTreeSet<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    (0..n).map(|_| random_disjoint_edges(c, &mut rng, 0, 8)).collect()
}
