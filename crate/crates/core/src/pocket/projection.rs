//! τ-projections to subsurfaces and the distances `d_Y`.
//!
//! For an annulus on a torus component, every τ-edge crossing the core has
//! a straight lift in the annular cover whose position is exact; `d_Y` is
//! the diameter of the union of positions.

use super::subsurface::{AnnulusData, SubsurfaceSpec};
use super::Subsurface;
use crate::error::{Error, Result};
use crate::fiber::arc::ArcClass;
use crate::fiber::graph::{nearly_simple_arcs, Carrier, GraphEdge, ProperGraph, VertexKind};
use crate::fiber::triangulation::EdgeId;
use crate::metrics::{annular_diameter, diam_as, DistanceBound};
use crate::quadratic::QuadNum;
use crate::section::Section;
use crate::veering::VeeringComplex;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq)]
pub enum Projection {
    /// Sorted distinct lift positions.
    Annular(Vec<QuadNum>),
    Arcs { classes: BTreeSet<ArcClass>, graph: ProperGraph },
}

impl Projection {
    pub fn is_empty(&self) -> bool {
        match self {
            Projection::Annular(p) => p.is_empty(),
            Projection::Arcs { classes, .. } => classes.is_empty(),
        }
    }

    /// Diameter of the projection: exact for annuli, an upper bound otherwise.
    pub fn diameter(&self) -> Result<DistanceBound> {
        match self {
            Projection::Annular(p) => Ok(DistanceBound {
                kind: crate::metrics::BoundKind::Exact,
                value: annular_diameter(p),
                rule: "annular lifts".into(),
            }),
            Projection::Arcs { graph, .. } => diam_as(graph),
        }
    }
}

fn annular_positions(c: &VeeringComplex, a: &AnnulusData, edges: impl IntoIterator<Item = EdgeId>) -> Result<Vec<QuadNum>> {
    let mut out = Vec::new();
    for e in edges {
        if c.component(e) != a.component {
            continue;
        }
        if let Some(p) = a.frame.position(c.vector(e)?)? {
            out.push(p);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `π_Y^τ` of an edge set.
pub fn proj_tau(c: &VeeringComplex, y: &Subsurface, edges: impl IntoIterator<Item = EdgeId>) -> Result<Projection> {
    if let Some(a) = &y.annulus {
        return Ok(Projection::Annular(annular_positions(c, a, edges)?));
    }
    if c.flat().is_none() {
        return Err(Error::ModelUnsupported("projections need a flat torus model".into()));
    }
    let comp = y.seed.or_else(|| y.boundary.first().copied()).map(|e| c.component(e));
    let mut graph_edges = Vec::new();
    for e in edges {
        if y.boundary.contains(&e) || comp.is_some_and(|k| c.component(e) != k) {
            continue;
        }
        graph_edges.push(GraphEdge { ends: [0, 0], carrier: Carrier::Flat(c.vector(e)?) });
    }
    let graph = ProperGraph::new(-1, vec![VertexKind::Puncture], graph_edges)?;
    Ok(Projection::Arcs { classes: nearly_simple_arcs(&graph), graph })
}

pub fn proj_section(c: &VeeringComplex, y: &Subsurface, t: &Section) -> Result<Projection> {
    proj_tau(c, y, t.edges(c))
}

fn positions<'a>(p: &'a Projection, side: &str) -> Result<&'a [QuadNum]> {
    match p {
        Projection::Annular(v) if v.is_empty() => Err(Error::EmptyProjection(side.into())),
        Projection::Annular(v) => Ok(v),
        Projection::Arcs { .. } => Err(Error::ModelUnsupported("exact d_Y needs an annulus".into())),
    }
}

/// `d_Y(K₁, K₂)`: the diameter of the union of both projections.
pub fn d_y(p1: &Projection, p2: &Projection) -> Result<u64> {
    let (a, b) = (positions(p1, "first")?, positions(p2, "second")?);
    Ok(annular_diameter(a.iter().chain(b)))
}

/// `d_Y(K, x)` for a single position `x`.
pub fn d_y_point(p: &Projection, x: &QuadNum) -> Result<u64> {
    let a = positions(p, "first")?;
    Ok(annular_diameter(a.iter().chain([x])))
}

/// Positions of `λ⁻` and `λ⁺` in the annular cover.
pub fn lambda_projection(c: &VeeringComplex, y: &Subsurface) -> Result<[QuadNum; 2]> {
    let a = match (&y.spec, &y.annulus) {
        (SubsurfaceSpec::Annulus { .. }, Some(a)) => a,
        _ => return Err(Error::ModelUnsupported("λ projections need a torus annulus".into())),
    };
    let [lm, lp] = c.laminations(a.component)?;
    let pos = |l: &[QuadNum; 2]| a.frame.position_quad(l).ok_or_else(|| Error::Inconsistent("an eigendirection is parallel to a lattice core".into()));
    Ok([pos(&lm)?, pos(&lp)?])
}

/// `d_Y(λ⁻, λ⁺)`.
pub fn lambda_distance(c: &VeeringComplex, y: &Subsurface) -> Result<u64> {
    let [m, p] = lambda_projection(c, y)?;
    Ok(annular_diameter([&m, &p]))
}
