//! The family `T(E)` of sections containing a disjoint edge set.

use super::ideal::Section;
use super::window::stabilize;
use crate::error::{Error, Result};
use crate::fiber::triangulation::EdgeId;
use crate::veering::{Step, VeeringComplex};
use std::collections::BTreeSet;

/// Errors with `NotDisjoint` on the first crossing pair.
pub fn check_disjoint(c: &VeeringComplex, edges: &BTreeSet<EdgeId>) -> Result<()> {
    let v: Vec<EdgeId> = edges.iter().copied().collect();
    for (i, &e) in v.iter().enumerate() {
        for &f in &v[i + 1..] {
            if c.crosses(e, f)? || c.crosses_combinatorially(e, f) {
                return Err(Error::NotDisjoint(c.edge_ref(e).to_string(), c.edge_ref(f).to_string()));
            }
        }
    }
    Ok(())
}

pub fn contains_all(c: &VeeringComplex, t: &Section, edges: &BTreeSet<EdgeId>) -> bool {
    edges.iter().all(|&e| t.has_edge(c, e))
}

/// Tetrahedra below any of `seeds` and at or above `lo`.
fn downset(c: &VeeringComplex, seeds: impl IntoIterator<Item = Step>, lo: Step) -> BTreeSet<Step> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<Step> = seeds.into_iter().filter(|&s| s >= lo).collect();
    while let Some(s) = stack.pop() {
        if out.insert(s) {
            stack.extend(c.preds(s).into_iter().filter(|&p| p >= lo && !out.contains(&p)));
        }
    }
    out
}

/// A section containing every edge of `edges`: the base layer with the
/// creators of `E` added below and everything above their destroyers
/// removed.
pub fn extend_to_section(c: &VeeringComplex, edges: &BTreeSet<EdgeId>) -> Result<Section> {
    check_disjoint(c, edges)?;
    if edges.is_empty() {
        return Ok(Section::base(0));
    }
    let deaths: Vec<Step> = edges.iter().map(|&e| c.edge_death(e)).collect();
    let lo = deaths.iter().copied().min().unwrap().min(0);
    let mut keep: BTreeSet<Step> = (lo..0).collect();
    keep.extend(downset(c, edges.iter().copied(), lo));
    let ideal = keep.into_iter().filter(|&s| !deaths.iter().any(|&d| c.tet_le(d, s)));
    let t = Section::from_parts(lo, ideal);
    t.check(c)?;
    if !contains_all(c, &t, edges) {
        return Err(Error::Inconsistent("extension lost a constrained edge".into()));
    }
    Ok(t)
}

fn step_range(c: &VeeringComplex, edges: &BTreeSet<EdgeId>) -> (Step, Step) {
    let lo = edges.iter().copied().min().unwrap_or(0);
    let hi = edges.iter().map(|&e| c.edge_death(e)).max().unwrap_or(0);
    (lo, hi)
}

/// Greedy upward moves avoiding `E`, inside `[lo, hi]`.
fn greedy_up(c: &VeeringComplex, start: &Section, edges: &BTreeSet<EdgeId>, hi: Step) -> Section {
    let mut t = start.clone();
    let mut work: Vec<Step> = t.up_moves(c);
    while let Some(s) = work.pop() {
        if s > hi || !t.can_move_up(c, s) || edges.contains(&c.tet(s).bottom) {
            continue;
        }
        t = t.insert(s);
        work.extend(c.succs(s));
    }
    t
}

fn greedy_down(c: &VeeringComplex, start: &Section, edges: &BTreeSet<EdgeId>, lo: Step) -> Section {
    let mut t = start.clone();
    let mut work: Vec<Step> = t.down_moves(c);
    while let Some(s) = work.pop() {
        if s < lo || !t.can_move_down(c, s) || edges.contains(&s) {
            continue;
        }
        t = t.remove(s);
        work.extend(c.preds(s));
    }
    t
}

/// The two greedy extremes from two starting sections; `Inconsistent`
/// if they disagree.
fn extreme(c: &VeeringComplex, edges: &BTreeSet<EdgeId>, up: bool) -> Result<Section> {
    if edges.is_empty() {
        return Err(Error::EmptyConstraint);
    }
    let start = extend_to_section(c, edges)?;
    let (lo, hi) = step_range(c, edges);
    let m = c.period();
    let out = stabilize(|w| {
        let (wlo, whi) = (lo - w * m, hi + w * m);
        let a = if up { greedy_up(c, &start, edges, whi) } else { greedy_down(c, &start, edges, wlo) };
        // second start: the opposite extreme
        let other = if up { greedy_down(c, &start, edges, wlo) } else { greedy_up(c, &start, edges, whi) };
        let b = if up { greedy_up(c, &other, edges, whi) } else { greedy_down(c, &other, edges, wlo) };
        if a != b {
            return Err(Error::Inconsistent(format!("greedy extremes disagree: {a} vs {b}")));
        }
        Ok(a)
    })?;
    out.check(c)?;
    if !contains_all(c, &out, edges) {
        return Err(Error::Inconsistent("extreme section lost a constrained edge".into()));
    }
    Ok(out)
}

/// The top `T⁺` of `T(E)`.
pub fn top_of(c: &VeeringComplex, edges: &BTreeSet<EdgeId>) -> Result<Section> {
    extreme(c, edges, true)
}

/// The bottom `T⁻` of `T(E)`.
pub fn bottom_of(c: &VeeringComplex, edges: &BTreeSet<EdgeId>) -> Result<Section> {
    extreme(c, edges, false)
}

/// Upward moves from `t1` to `t2` inside `T(E)`, in increasing step order.
pub fn monotone_path(c: &VeeringComplex, t1: &Section, t2: &Section, edges: &BTreeSet<EdgeId>) -> Result<Vec<Step>> {
    if !t1.leq(t2) {
        return Err(Error::NotOrdered);
    }
    for (name, t) in [("first", t1), ("second", t2)] {
        if let Some(e) = edges.iter().find(|&&e| !t.has_edge(c, e)) {
            return Err(Error::NotContaining(format!("{name} section misses {}", c.edge_ref(*e))));
        }
    }
    let path: Vec<Step> = t1.difference_from(t2).into_iter().collect();
    let mut cur = t1.clone();
    for &s in &path {
        cur = cur.move_up(c, s)?;
        if !contains_all(c, &cur, edges) {
            return Err(Error::Inconsistent(format!("path leaves T(E) at tetrahedron {s}")));
        }
    }
    if &cur != t2 {
        return Err(Error::Inconsistent("path does not end at the target".into()));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::veering::MonodromySpec;

    fn build(w: &str) -> VeeringComplex {
        VeeringComplex::build(&MonodromySpec::word(w)).unwrap()
    }

    #[test]
    fn empty_constraint() {
        let c = build("RL");
        assert_eq!(extend_to_section(&c, &BTreeSet::new()).unwrap(), Section::base(0));
        assert_eq!(top_of(&c, &BTreeSet::new()).unwrap_err(), Error::EmptyConstraint);
    }

    #[test]
    fn full_layer_is_fixed() {
        let c = build("RRL");
        for k in [-2, 0, 5] {
            let e = Section::base(k).edges(&c);
            assert_eq!(top_of(&c, &e).unwrap(), Section::base(k));
            assert_eq!(bottom_of(&c, &e).unwrap(), Section::base(k));
        }
    }

    #[test]
    fn single_edge_band() {
        let c = build("R^6L");
        for e in -10..10 {
            let es = BTreeSet::from([e]);
            let t = extend_to_section(&c, &es).unwrap();
            let lo = bottom_of(&c, &es).unwrap();
            let hi = top_of(&c, &es).unwrap();
            assert!(lo.leq(&t) && t.leq(&hi));
            // on the torus the band is the edge's lifetime
            assert_eq!(lo, Section::base(e + 1));
            assert_eq!(hi, Section::base(c.edge_death(e)));
            let path = monotone_path(&c, &lo, &hi, &es).unwrap();
            assert_eq!(path.len(), lo.region(&hi).len());
        }
    }

    #[test]
    fn crossing_edges_are_rejected() {
        let c = build("RL");
        let t = Section::base(0);
        let e = *t.edges(&c).iter().next().unwrap();
        let f = c.edge_death(e);
        assert!(matches!(extend_to_section(&c, &[e, f].into()), Err(Error::NotDisjoint(..))));
    }
}
