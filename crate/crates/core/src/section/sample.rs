//! Seeded random sections and edge sets.

use super::ideal::Section;
use crate::fiber::triangulation::EdgeId;
use crate::veering::{Step, VeeringComplex};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeSet;

/// A random walk of `moves` tetrahedron moves from the layer `start`.
pub fn random_section<R: Rng>(c: &VeeringComplex, rng: &mut R, start: Step, moves: usize) -> Section {
    let mut t = Section::base(start);
    for _ in 0..moves {
        let up = rng.gen_bool(0.5);
        let options = if up { t.up_moves(c) } else { t.down_moves(c) };
        if let Some(&s) = options.choose(rng) {
            t = if up { t.insert(s) } else { t.remove(s) };
        }
    }
    t
}

/// A random subset of the edges of a random section, meeting every
/// component of the fiber so that `T(E)` has a top and a bottom.
pub fn random_disjoint_edges<R: Rng>(c: &VeeringComplex, rng: &mut R, start: Step, moves: usize) -> BTreeSet<EdgeId> {
    let t = random_section(c, rng, start, moves);
    let edges: Vec<EdgeId> = t.edges(c).into_iter().collect();
    let k = rng.gen_range(1..=edges.len());
    let mut out: BTreeSet<EdgeId> = edges.choose_multiple(rng, k).copied().collect();
    for comp in 0..c.component_count() {
        if !out.iter().any(|&e| c.component(e) == comp) {
            let own: Vec<EdgeId> = edges.iter().copied().filter(|&e| c.component(e) == comp).collect();
            out.extend(own.choose(rng));
        }
    }
    out
}
