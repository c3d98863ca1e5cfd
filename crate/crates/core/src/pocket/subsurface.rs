//! τ-compatible subsurfaces and their τ-boundaries.

use crate::error::{Error, Result};
use crate::fiber::slope::{Slope, Vec2};
use crate::fiber::triangulation::EdgeId;
use crate::metrics::AnnularFrame;
use crate::section::{check_disjoint, window_cap};
use crate::veering::{TauEdgeRef, VeeringComplex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SubsurfaceSpec {
    Annulus { core: Slope },
    /// A τ-edge boundary; the interior is the complementary region
    /// containing `seed`, or every complementary region if absent.
    ExplicitBoundary { boundary: BTreeSet<TauEdgeRef>, seed: Option<TauEdgeRef> },
}

impl fmt::Display for SubsurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsurfaceSpec::Annulus { core } => write!(f, "annulus {core}"),
            SubsurfaceSpec::ExplicitBoundary { boundary, .. } => {
                write!(f, "boundary {{")?;
                for (i, e) in boundary.iter().enumerate() {
                    write!(f, "{}{e}", if i > 0 { " " } else { "" })?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl SubsurfaceSpec {
    pub fn annulus(core: Slope) -> Self {
        SubsurfaceSpec::Annulus { core }
    }

    pub fn is_annulus(&self) -> bool {
        matches!(self, SubsurfaceSpec::Annulus { .. })
    }
}

/// The global edge realizing `slope`, searching levels outward from 0.
pub fn find_pivot(c: &VeeringComplex, slope: Slope) -> Result<EdgeId> {
    if c.flat().is_none() {
        return Err(Error::ModelUnsupported("annuli need a flat torus model".into()));
    }
    let m = c.period();
    let cap = window_cap();
    for k in 0..=cap {
        for level in if k == 0 { vec![0] } else { vec![-k, k] } {
            for r in 0..m {
                let s = level * m + r;
                if let Ok(v) = c.vector(s) {
                    if v.slope()? == slope {
                        return Ok(s);
                    }
                }
            }
        }
    }
    Err(Error::NotCompatible { slope: slope.to_string(), pivots: pivot_slopes(c)?.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ") })
}

/// Slopes of the edge orbit representatives created just below layer 0.
pub fn pivot_slopes(c: &VeeringComplex) -> Result<Vec<Slope>> {
    (-c.period()..0).map(|s| c.vector(s)?.slope()).collect()
}

/// One annulus per edge orbit.
pub fn pivot_annuli(c: &VeeringComplex) -> Result<Vec<SubsurfaceSpec>> {
    Ok(pivot_slopes(c)?.into_iter().map(SubsurfaceSpec::annulus).collect())
}

/// `∂_τY` as global edge ids.
pub fn tau_boundary(c: &VeeringComplex, y: &SubsurfaceSpec) -> Result<BTreeSet<EdgeId>> {
    match y {
        SubsurfaceSpec::Annulus { core } => Ok([find_pivot(c, *core)?].into()),
        SubsurfaceSpec::ExplicitBoundary { boundary, .. } => {
            let edges = boundary.iter().map(|&r| c.edge_id(r)).collect::<Result<BTreeSet<_>>>()?;
            check_disjoint(c, &edges)?;
            Ok(edges)
        }
    }
}

/// Flat data of an annulus: its core edge, frame and torus component.
#[derive(Debug, Clone)]
pub struct AnnulusData {
    pub pivot: EdgeId,
    pub core: Vec2,
    pub frame: AnnularFrame,
    pub component: usize,
}

impl AnnulusData {
    pub fn new(c: &VeeringComplex, pivot: EdgeId) -> Result<Self> {
        let core = c.vector(pivot)?;
        Ok(AnnulusData { pivot, core, frame: AnnularFrame::new(core)?, component: c.component(pivot) })
    }
}
