//! Proper graphs and their nearly simple arcs.
//!
//! Puncture vertices are removed from the surface, so a path may only end
//! at them; interior vertices can be passed through, at most twice each.
//! Flat edges carry a displacement on the square torus and multi-edge
//! paths are classified by their total displacement.

use super::arc::ArcClass;
use super::slope::Vec2;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    Puncture,
    Interior,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Carrier {
    /// Straight segment with this displacement from `ends[0]` to `ends[1]`.
    Flat(Vec2),
    /// An ideal arc between punctures with a known class.
    Class(ArcClass),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub ends: [usize; 2],
    pub carrier: Carrier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperGraph {
    surface_chi: i64,
    vertices: Vec<VertexKind>,
    edges: Vec<GraphEdge>,
}

impl ProperGraph {
    pub fn new(surface_chi: i64, vertices: Vec<VertexKind>, edges: Vec<GraphEdge>) -> Result<Self> {
        if surface_chi >= 0 {
            return Err(Error::Invalid(format!("surface Euler characteristic {surface_chi} is not negative")));
        }
        if let Some(e) = edges.iter().find(|e| e.ends.iter().any(|&v| v >= vertices.len())) {
            return Err(Error::Invalid(format!("edge ends {:?} out of range", e.ends)));
        }
        Ok(ProperGraph { surface_chi, vertices, edges })
    }

    /// The graph of a set of ideal arcs on a surface with `punctures` punctures.
    pub fn of_arcs(surface_chi: i64, punctures: usize, arcs: Vec<([usize; 2], ArcClass)>) -> Result<Self> {
        let edges = arcs.into_iter().map(|(ends, c)| GraphEdge { ends, carrier: Carrier::Class(c) }).collect();
        ProperGraph::new(surface_chi, vec![VertexKind::Puncture; punctures], edges)
    }

    pub fn surface_chi(&self) -> i64 {
        self.surface_chi
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// The subgraph on the first `n` edges.
    pub fn prefix(&self, n: usize) -> ProperGraph {
        ProperGraph { surface_chi: self.surface_chi, vertices: self.vertices.clone(), edges: self.edges[..n].to_vec() }
    }

    pub fn is_essential(&self) -> bool {
        !nearly_simple_arcs(self).is_empty()
    }
}

/// All essential classes carried by paths or cycles visiting no vertex
/// more than twice.
pub fn nearly_simple_arcs(g: &ProperGraph) -> BTreeSet<ArcClass> {
    let mut out = BTreeSet::new();
    let mut visits = vec![0u8; g.vertices.len()];
    for e in &g.edges {
        for dir in 0..2 {
            let (from, to) = (e.ends[dir], e.ends[1 - dir]);
            if g.vertices[from] != VertexKind::Puncture {
                continue;
            }
            if let Carrier::Class(c) = &e.carrier {
                if g.vertices[to] == VertexKind::Puncture {
                    out.insert(c.clone());
                }
                continue;
            }
            let Some(step) = displacement(e, dir) else { continue };
            walk(g, to, step, &mut visits, &mut out);
        }
    }
    for (v, kind) in g.vertices.iter().enumerate() {
        if *kind == VertexKind::Interior {
            visits[v] = 1;
            walk_cycles(g, v, v, Vec2::new(0, 0), &mut visits, &mut out);
            visits[v] = 0;
        }
    }
    out
}

fn displacement(e: &GraphEdge, dir: usize) -> Option<Vec2> {
    match &e.carrier {
        Carrier::Flat(v) => Some(if dir == 0 { *v } else { v.neg() }),
        Carrier::Class(_) => None,
    }
}

fn classify(sum: Vec2, curve: bool) -> Option<ArcClass> {
    if sum.is_zero() || !sum.is_primitive() {
        return None;
    }
    let slope = sum.slope().ok()?;
    Some(if curve { ArcClass::curve(slope) } else { ArcClass::arc(slope) })
}

fn walk(g: &ProperGraph, at: usize, sum: Vec2, visits: &mut [u8], out: &mut BTreeSet<ArcClass>) {
    if g.vertices[at] == VertexKind::Puncture {
        if let Some(c) = classify(sum, false) {
            out.insert(c);
        }
        return;
    }
    if visits[at] >= 2 {
        return;
    }
    visits[at] += 1;
    for e in &g.edges {
        for dir in 0..2 {
            if e.ends[dir] != at {
                continue;
            }
            let Some(step) = displacement(e, dir) else { continue };
            if let Ok(next) = sum.add(step) {
                walk(g, e.ends[1 - dir], next, visits, out);
            }
        }
    }
    visits[at] -= 1;
}

fn walk_cycles(g: &ProperGraph, start: usize, at: usize, sum: Vec2, visits: &mut [u8], out: &mut BTreeSet<ArcClass>) {
    for e in &g.edges {
        for dir in 0..2 {
            if e.ends[dir] != at {
                continue;
            }
            let to = e.ends[1 - dir];
            if g.vertices[to] == VertexKind::Puncture {
                continue;
            }
            let Some(step) = displacement(e, dir) else { continue };
            let Ok(next) = sum.add(step) else { continue };
            if to == start {
                if let Some(c) = classify(next, true) {
                    out.insert(c);
                }
            }
            if visits[to] < 2 {
                visits[to] += 1;
                walk_cycles(g, start, to, next, visits, out);
                visits[to] -= 1;
            }
        }
    }
}

/// `max(|χ|, 1)`.
pub fn chi_prime(chi: i64) -> i64 {
    chi.abs().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::slope::Slope;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn single_edge() {
        let g = ProperGraph::of_arcs(-1, 1, vec![([0, 0], ArcClass::arc(s("1/1")))]).unwrap();
        assert_eq!(nearly_simple_arcs(&g), [ArcClass::arc(s("1/1"))].into());
    }

    #[test]
    fn torus_triangulation_carries_its_edges() {
        let flat = |x, y| GraphEdge { ends: [0, 0], carrier: Carrier::Flat(Vec2::new(x, y)) };
        let g = ProperGraph::new(-1, vec![VertexKind::Puncture], vec![flat(1, 0), flat(0, 1), flat(1, 1)]).unwrap();
        let want: BTreeSet<_> = ["0/1", "1/0", "1/1"].iter().map(|x| ArcClass::arc(s(x))).collect();
        assert_eq!(nearly_simple_arcs(&g), want);
    }

    #[test]
    fn null_homotopic_loop_is_inessential() {
        let g = ProperGraph::new(
            -1,
            vec![VertexKind::Interior],
            vec![GraphEdge { ends: [0, 0], carrier: Carrier::Flat(Vec2::new(0, 0)) }],
        )
        .unwrap();
        assert!(nearly_simple_arcs(&g).is_empty());
        assert!(!g.is_essential());
        let isolated = ProperGraph::new(-1, vec![VertexKind::Interior], vec![]).unwrap();
        assert!(!isolated.is_essential());
    }

    #[test]
    fn paths_through_interior_vertices() {
        // puncture 0 and one interior vertex carrying a loop
        let e = |a, b, x, y| GraphEdge { ends: [a, b], carrier: Carrier::Flat(Vec2::new(x, y)) };
        let g = ProperGraph::new(
            -1,
            vec![VertexKind::Puncture, VertexKind::Interior],
            vec![e(0, 1, 1, 1), e(1, 0, 0, 1), e(1, 1, 1, 0)],
        )
        .unwrap();
        let arcs = nearly_simple_arcs(&g);
        assert!(arcs.contains(&ArcClass::arc(s("2/1"))));
        assert!(arcs.contains(&ArcClass::curve(s("0/1"))));
    }

    #[test]
    fn chi_prime_values() {
        assert_eq!(chi_prime(0), 1);
        assert_eq!(chi_prime(-1), 1);
        assert_eq!(chi_prime(-2), 2);
    }
}
