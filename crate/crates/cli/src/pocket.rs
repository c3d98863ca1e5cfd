//! The report emitted by the `pocket` command.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use veerlat::pocket::{
    d_y, first_translate_overlap, isolated_pocket, lambda_distance, maximal_pocket, overlap_index, proj_section,
    IsolationOptions, PocketKind, Subsurface, SubsurfaceSpec,
};
use veerlat::veering::{TauEdgeRef, VeeringComplex};

/// Contents of a `--boundary` file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryFile {
    pub boundary: BTreeSet<TauEdgeRef>,
    #[serde(default)]
    pub seed: Option<TauEdgeRef>,
}

impl From<BoundaryFile> for SubsurfaceSpec {
    fn from(b: BoundaryFile) -> Self {
        SubsurfaceSpec::ExplicitBoundary { boundary: b.boundary, seed: b.seed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PocketSummary {
    pub kind: String,
    pub bottom: String,
    pub top: String,
    pub tetrahedra: usize,
    pub region: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedSummary {
    pub pocket: PocketSummary,
    pub hypothesis_met: bool,
    pub overlap_index: i64,
    pub t0: String,
    pub t0_distance: u64,
    pub top_certificate: u64,
    pub bottom_certificate: u64,
    pub translate_to_lambda_minus: u64,
    pub span: u64,
    pub embedding_horizon: i64,
    pub first_translate_overlap: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PocketReport {
    pub subsurface: SubsurfaceSpec,
    pub boundary: Vec<TauEdgeRef>,
    pub chi_prime: i64,
    pub lambda_distance: Option<u64>,
    /// `d_Y(λ⁻,λ⁺) ≥ 4` for annuli.
    pub compatible: Option<bool>,
    /// `d_Y(T⁻, T⁺)`.
    pub band_distance: Option<u64>,
    pub slack: String,
    pub maximal: PocketSummary,
    pub overlap_index: Option<i64>,
    pub isolated: Option<IsolatedSummary>,
    pub isolated_unavailable: Option<String>,
}

fn summary(p: &veerlat::pocket::Pocket) -> PocketSummary {
    let kind = match p.kind {
        PocketKind::Maximal => "maximal",
        PocketKind::Pinched => "pinched",
        PocketKind::Isolated { .. } => "isolated",
    };
    PocketSummary {
        kind: kind.into(),
        bottom: p.bottom.to_string(),
        top: p.top.to_string(),
        tetrahedra: p.count(),
        region: p.region.iter().copied().collect(),
    }
}

pub fn pocket_report(c: &VeeringComplex, spec: &SubsurfaceSpec, research_mode: bool) -> veerlat::Result<PocketReport> {
    let y = Subsurface::resolve(c, spec)?;
    let maximal = maximal_pocket(c, &y)?;
    let annulus = y.annulus.is_some();
    let dist = if annulus { Some(lambda_distance(c, &y)?) } else { None };
    let band = if annulus {
        Some(d_y(&proj_section(c, &y, &maximal.bottom)?, &proj_section(c, &y, &maximal.top)?)?)
    } else {
        None
    };
    let (isolated, unavailable) = match isolated_pocket(c, &y, IsolationOptions { research_mode }) {
        Ok(v) => {
            let PocketKind::Isolated { overlap_index: n, ref t0, t0_distance } = v.pocket.kind else { unreachable!() };
            let horizon = n + 2 * c.period();
            (
                Some(IsolatedSummary {
                    pocket: summary(&v.pocket),
                    hypothesis_met: v.hypothesis_met,
                    overlap_index: n,
                    t0: t0.to_string(),
                    t0_distance,
                    top_certificate: v.top_certificate,
                    bottom_certificate: v.bottom_certificate,
                    translate_to_lambda_minus: v.translate_to_lambda_minus,
                    span: v.span,
                    embedding_horizon: horizon,
                    first_translate_overlap: first_translate_overlap(c, &v.pocket.region, horizon),
                }),
                None,
            )
        }
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(PocketReport {
        subsurface: spec.clone(),
        boundary: y.boundary.iter().map(|&e| c.edge_ref(e)).collect(),
        chi_prime: y.chi_prime(c)?,
        lambda_distance: dist,
        compatible: dist.map(|d| d >= 4),
        band_distance: band,
        slack: "annular diameter of a union; ±2 against min-distance conventions".into(),
        maximal: summary(&maximal),
        overlap_index: overlap_index(c, &y).ok(),
        isolated,
        isolated_unavailable: unavailable,
    })
}
