//! Pockets between sections of `T(∂_τY)`, the retraction `T ↦ T^Y`, the
//! overlap index and isolated pockets.

use super::projection::{d_y, d_y_point, lambda_distance, lambda_projection, proj_section};
use super::subsurface::{tau_boundary, AnnulusData, SubsurfaceSpec};
use crate::error::{Error, Result};
use crate::fiber::triangulation::{EdgeId, TriangleId, UnionFind};
use crate::metrics::D;
use crate::section::{bottom_of, contains_all, top_of, window_cap, Section};
use crate::veering::{Step, VeeringComplex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A subsurface resolved against a complex.
#[derive(Debug, Clone)]
pub struct Subsurface {
    pub spec: SubsurfaceSpec,
    pub boundary: BTreeSet<EdgeId>,
    pub annulus: Option<AnnulusData>,
    pub seed: Option<EdgeId>,
}

impl Subsurface {
    pub fn resolve(c: &VeeringComplex, spec: &SubsurfaceSpec) -> Result<Subsurface> {
        let boundary = tau_boundary(c, spec)?;
        let (annulus, seed) = match spec {
            SubsurfaceSpec::Annulus { .. } => (Some(AnnulusData::new(c, *boundary.first().unwrap())?), None),
            SubsurfaceSpec::ExplicitBoundary { seed, .. } => (None, seed.map(|r| c.edge_id(r)).transpose()?),
        };
        Ok(Subsurface { spec: spec.clone(), boundary, annulus, seed })
    }

    /// Bottom and top of `T(∂_τY)`.
    pub fn bounds(&self, c: &VeeringComplex) -> Result<(Section, Section)> {
        Ok((bottom_of(c, &self.boundary)?, top_of(c, &self.boundary)?))
    }

    /// Euler characteristic of the interior, read off a section.
    pub fn chi(&self, c: &VeeringComplex) -> Result<i64> {
        if self.annulus.is_some() {
            return Ok(0);
        }
        let (bottom, _) = self.bounds(c)?;
        let tris = region_triangles(c, self, &bottom);
        let edges: BTreeSet<EdgeId> =
            tris.iter().flat_map(|t| c.triangle_sides(*t)).filter(|e| !self.boundary.contains(e)).collect();
        Ok(tris.len() as i64 - edges.len() as i64)
    }

    pub fn chi_prime(&self, c: &VeeringComplex) -> Result<i64> {
        Ok(crate::fiber::graph::chi_prime(self.chi(c)?))
    }
}

/// Triangles of `T` lying in `int_τ(Y)`: complementary regions of `∂_τY`
/// in the core's component, or the region containing the seed.
pub fn region_triangles(c: &VeeringComplex, y: &Subsurface, t: &Section) -> BTreeSet<TriangleId> {
    let tris: BTreeMap<TriangleId, [EdgeId; 3]> = t.triangles(c);
    let ids: Vec<TriangleId> = tris.keys().copied().collect();
    let mut by_edge: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for (i, s) in tris.values().enumerate() {
        for &e in s {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut uf = UnionFind::new(ids.len());
    for (e, ts) in &by_edge {
        if !y.boundary.contains(e) && ts.len() == 2 {
            uf.union(ts[0], ts[1]);
        }
    }
    let keep: Option<BTreeSet<usize>> = if let Some(a) = &y.annulus {
        Some(ids.iter().enumerate().filter(|(_, &t)| c.component(tris[&t][0]) == a.component).map(|(i, _)| uf.find(i)).collect())
    } else {
        y.seed.and_then(|s| by_edge.get(&s)).map(|ts| ts.iter().map(|&i| uf.find(i)).collect())
    };
    ids.iter()
        .enumerate()
        .filter(|(i, _)| keep.as_ref().map_or(true, |k| k.contains(&uf.find(*i))))
        .map(|(_, &t)| t)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PocketKind {
    Maximal,
    Pinched,
    Isolated { overlap_index: i64, t0: Section, t0_distance: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pocket {
    pub bottom: Section,
    pub top: Section,
    /// Tetrahedra of `U(bottom, top)` lying over `int_τ(Y)`.
    pub region: BTreeSet<Step>,
    pub kind: PocketKind,
}

impl Pocket {
    pub fn count(&self) -> usize {
        self.region.len()
    }
}

/// Tetrahedra of `U(t1, t2)` over `int_τ(Y)`, found by walking the
/// monotone path and testing each flipped quadrilateral.
pub fn pocket_region(c: &VeeringComplex, y: &Subsurface, t1: &Section, t2: &Section) -> Result<BTreeSet<Step>> {
    if !t1.leq(t2) {
        return Err(Error::NotOrdered);
    }
    let mut out = BTreeSet::new();
    let mut cur = t1.clone();
    for s in t1.difference_from(t2) {
        let region = region_triangles(c, y, &cur);
        if c.tet(s).below.iter().all(|t| region.contains(t)) {
            out.insert(s);
        }
        cur = cur.move_up(c, s)?;
    }
    Ok(out)
}

fn in_family(c: &VeeringComplex, y: &Subsurface, t: &Section) -> Result<()> {
    if !contains_all(c, t, &y.boundary) {
        return Err(Error::NotContaining(format!("section {t} misses part of ∂_τY")));
    }
    Ok(())
}

/// `U_Y(t1, t2)` for sections of `T(∂_τY)`.
pub fn pinched_pocket(c: &VeeringComplex, y: &Subsurface, t1: &Section, t2: &Section) -> Result<Pocket> {
    in_family(c, y, t1)?;
    in_family(c, y, t2)?;
    let region = pocket_region(c, y, t1, t2)?;
    Ok(Pocket { bottom: t1.clone(), top: t2.clone(), region, kind: PocketKind::Pinched })
}

/// `U_Y = U_Y(T⁻, T⁺)`.
pub fn maximal_pocket(c: &VeeringComplex, y: &Subsurface) -> Result<Pocket> {
    let (bottom, top) = y.bounds(c)?;
    let region = pocket_region(c, y, &bottom, &top)?;
    Ok(Pocket { bottom, top, region, kind: PocketKind::Maximal })
}

/// Both retraction formulas `T⁺ ∧ (T⁻ ∨ T)` and `T⁻ ∨ (T⁺ ∧ T)`.
pub fn retract_both(bounds: &(Section, Section), t: &Section) -> (Section, Section) {
    let (lo, hi) = bounds;
    (hi.meet(&lo.join(t)), lo.join(&hi.meet(t)))
}

/// `T^Y`; `Inconsistent` if the two formulas disagree.
pub fn retract_to_pocket(c: &VeeringComplex, y: &Subsurface, t: &Section) -> Result<Section> {
    let bounds = y.bounds(c)?;
    retract_with(c, y, &bounds, t)
}

pub fn retract_with(c: &VeeringComplex, y: &Subsurface, bounds: &(Section, Section), t: &Section) -> Result<Section> {
    let (a, b) = retract_both(bounds, t);
    if a != b {
        return Err(Error::Inconsistent(format!("retraction formulas disagree: {a} vs {b}")));
    }
    in_family(c, y, &a)?;
    Ok(a)
}

/// Least `i > 0` with `φ^i(Y)` overlapping `Y`.
pub fn overlap_index(c: &VeeringComplex, y: &Subsurface) -> Result<i64> {
    let m = c.period();
    let cap = window_cap();
    for i in 1..=cap {
        let shifted: Vec<EdgeId> = y.boundary.iter().map(|e| e - i * m).collect();
        let mut overlap = false;
        for &e in &y.boundary {
            for &f in &shifted {
                if c.component(e) != c.component(f) {
                    continue;
                }
                if e == f {
                    return Err(Error::Inconsistent(format!("∂_τY is invariant under φ^{i}")));
                }
                let crosses = match &y.annulus {
                    // distinct core curves on a torus meet
                    Some(_) => c.vector(e)?.det(c.vector(f)?)? != 0,
                    None => c.crosses(e, f)?,
                };
                overlap |= crosses;
            }
        }
        if overlap {
            return Ok(i);
        }
    }
    Err(Error::NoOverlapFound(cap))
}

/// Options for building isolated pockets.
#[derive(Debug, Clone, Copy, Default)]
pub struct IsolationOptions {
    /// Build even when `d_Y(λ⁻, λ⁺) < 10D`.
    pub research_mode: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedPocket {
    pub pocket: Pocket,
    pub lambda_distance: u64,
    pub hypothesis_met: bool,
    /// `d_Y(T₀^Y, λ⁺)`, certified `≤ 9D`.
    pub top_certificate: u64,
    /// `d_Y(Φ^N(T₀)^Y, λ⁻)`, certified `≤ 7D`.
    pub bottom_certificate: u64,
    /// `d_Y(Φ^N(T₀), λ⁻)`.
    pub translate_to_lambda_minus: u64,
    /// `d_Y(Φ^N(T₀)^Y, T₀^Y)`.
    pub span: u64,
}

/// Chooses `T₀` among sweep layers with `3D ≤ d_Y(T₀, λ⁺) ≤ 5D`,
/// minimizing `|d − 4D|` and then the level.
pub fn select_t0(c: &VeeringComplex, y: &Subsurface, bounds: &(Section, Section)) -> Result<(Section, u64)> {
    let [_, lp] = lambda_projection(c, y)?;
    let m = c.period();
    let (lo, hi) = (bounds.0.floor() - m, bounds.1.top_step() + m);
    let mut best: Option<(i64, Step, u64)> = None;
    for k in lo..=hi {
        let p = proj_section(c, y, &Section::base(k))?;
        if p.is_empty() {
            continue;
        }
        let d = d_y_point(&p, &lp)?;
        if (3 * D as u64..=5 * D as u64).contains(&d) {
            let key = ((d as i64 - 4 * D).abs(), k, d);
            if best.map_or(true, |b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
    }
    let (_, k, d) = best.ok_or_else(|| Error::NoT0InBand(format!("no sweep layer in [{lo}, {hi}] lies in the band")))?;
    Ok((Section::base(k), d))
}

/// `V_Y = U_Y(Φ^N(T₀)^Y, T₀^Y)`.
pub fn isolated_pocket(c: &VeeringComplex, y: &Subsurface, opts: IsolationOptions) -> Result<IsolatedPocket> {
    let dist = lambda_distance(c, y)?;
    let met = dist as i64 >= 10 * D;
    if !met && !opts.research_mode {
        return Err(Error::HypothesisUnmet(format!("d_Y(λ⁻, λ⁺) = {dist} < {}", 10 * D)));
    }
    let n = overlap_index(c, y)?;
    let bounds = y.bounds(c)?;
    let (t0, t0_distance) = select_t0(c, y, &bounds)?;
    let translate = t0.apply_deck(c, n);
    let top = retract_with(c, y, &bounds, &t0)?;
    let bottom = retract_with(c, y, &bounds, &translate)?;
    let region = pocket_region(c, y, &bottom, &top)?;
    let [lm, lp] = lambda_projection(c, y)?;
    let pt = proj_section(c, y, &top)?;
    let pb = proj_section(c, y, &bottom)?;
    Ok(IsolatedPocket {
        lambda_distance: dist,
        hypothesis_met: met,
        top_certificate: d_y_point(&pt, &lp)?,
        bottom_certificate: d_y_point(&pb, &lm)?,
        translate_to_lambda_minus: d_y_point(&proj_section(c, y, &translate)?, &lm)?,
        span: d_y(&pb, &pt)?,
        pocket: Pocket { bottom, top, region, kind: PocketKind::Isolated { overlap_index: n, t0, t0_distance } },
    })
}

/// Smallest `i` in `1..=horizon` with `Φ^i(V) ∩ V ≠ ∅`, if any.
pub fn first_translate_overlap(c: &VeeringComplex, region: &BTreeSet<Step>, horizon: i64) -> Option<i64> {
    (1..=horizon).find(|&i| region.iter().any(|s| region.contains(&(s - i * c.period()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::slope::Slope;
    use crate::pocket::proj_tau;
    use crate::veering::{fixtures, MonodromySpec};

    fn annulus(word: &str, core: &str) -> (VeeringComplex, Subsurface) {
        let c = VeeringComplex::build(&MonodromySpec::word(word)).unwrap();
        let y = Subsurface::resolve(&c, &SubsurfaceSpec::annulus(core.parse::<Slope>().unwrap())).unwrap();
        (c, y)
    }

    #[test]
    fn r6l_run_annulus() {
        let (c, y) = annulus("R^6L", "0/1");
        assert_eq!(lambda_distance(&c, &y).unwrap(), 9);
        let p = maximal_pocket(&c, &y).unwrap();
        assert_eq!((p.bottom.clone(), p.top.clone()), (Section::base(-1), Section::base(6)));
        assert_eq!(p.count(), 7);
        assert_eq!(overlap_index(&c, &y).unwrap(), 1);
        let (pb, pt) = (proj_section(&c, &y, &p.bottom).unwrap(), proj_section(&c, &y, &p.top).unwrap());
        assert_eq!(d_y(&pb, &pt).unwrap(), 9);
    }

    #[test]
    fn r6l_short_annulus() {
        let (c, y) = annulus("R^6L", "1/1");
        assert_eq!(lambda_distance(&c, &y).unwrap(), 2);
        assert_eq!(maximal_pocket(&c, &y).unwrap().count(), 1);
    }

    #[test]
    fn boundary_projects_to_nothing() {
        let (c, y) = annulus("R^6L", "0/1");
        assert!(proj_tau(&c, &y, y.boundary.iter().copied()).unwrap().is_empty());
        let (_, top) = y.bounds(&c).unwrap();
        assert!(!proj_section(&c, &y, &top).unwrap().is_empty());
    }

    #[test]
    fn retraction_fixes_band_and_clamps() {
        let (c, y) = annulus("R^6L", "0/1");
        let bounds = y.bounds(&c).unwrap();
        let mid = Section::base(2);
        assert_eq!(retract_to_pocket(&c, &y, &mid).unwrap(), mid);
        assert_eq!(retract_to_pocket(&c, &y, &Section::base(40)).unwrap(), bounds.1);
        assert_eq!(retract_to_pocket(&c, &y, &Section::base(-40)).unwrap(), bounds.0);
    }

    #[test]
    fn non_pivot_is_incompatible() {
        let c = VeeringComplex::build(&MonodromySpec::word("R^6L")).unwrap();
        let err = Subsurface::resolve(&c, &SubsurfaceSpec::annulus("17/5".parse().unwrap())).unwrap_err();
        assert!(matches!(err, Error::NotCompatible { .. }));
    }

    #[test]
    fn swap_overlap_index_is_two() {
        let c = VeeringComplex::build(&fixtures::swap_spec().unwrap()).unwrap();
        for spec in super::super::pivot_annuli(&c).unwrap() {
            let y = Subsurface::resolve(&c, &spec).unwrap();
            assert_eq!(overlap_index(&c, &y).unwrap(), 2);
        }
    }

    #[test]
    fn hypothesis_gate_sits_at_ten_d() {
        let (c, y) = annulus("R^146L", "0/1");
        assert_eq!(lambda_distance(&c, &y).unwrap(), 149);
        assert!(matches!(isolated_pocket(&c, &y, IsolationOptions::default()), Err(Error::HypothesisUnmet(_))));
        let (c, y) = annulus("R^147L", "0/1");
        assert_eq!(lambda_distance(&c, &y).unwrap(), 150);
        assert!(isolated_pocket(&c, &y, IsolationOptions::default()).unwrap().hypothesis_met);
    }

    #[test]
    fn isolated_pocket_embeds() {
        let (c, y) = annulus("R^200L", "0/1");
        let v = isolated_pocket(&c, &y, IsolationOptions::default()).unwrap();
        assert_eq!(v.lambda_distance, 203);
        assert!(v.top_certificate <= 9 * D as u64 && v.bottom_certificate <= 7 * D as u64);
        assert!(v.pocket.count() > 0);
        assert_eq!(first_translate_overlap(&c, &v.pocket.region, 1 + 2 * c.period()), None);
    }
}
