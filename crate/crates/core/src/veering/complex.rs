//! The Z-periodic layered triangulation of the cyclic cover.
//!
//! Tetrahedra of the cover are indexed by their flip step `s ∈ ℤ`; step
//! `s + m` is the deck translate of step `s` for period `m`. A τ-edge is
//! named by the step of the tetrahedron whose top diagonal it is, and a
//! triangle created by tetrahedron `s` has id `2s` (sides `[s, d, a]`) or
//! `2s + 1` (sides `[s, b, c]`).

use super::coloring::{color_complex, Color};
use super::monodromy::{FlipScript, MonodromySpec};
use crate::error::{Error, Result};
use crate::fiber::slope::{Mat2, Vec2};
use crate::fiber::triangulation::{rotate_min, EdgeId, FlipRecord, IdealTriangulation, TriangleId};
use crate::quadratic::QuadNum;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

pub type Step = i64;

/// A τ-edge orbit and a level; the edge created at step `level·m + orbit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TauEdgeRef {
    pub orbit: usize,
    pub level: i64,
}

impl fmt::Display for TauEdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}@{}", self.orbit, self.level)
    }
}

impl std::str::FromStr for TauEdgeRef {
    type Err = Error;

    /// Parses `e{orbit}@{level}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("edge reference {s:?} is not of the form e<orbit>@<level>"));
        let (o, l) = s.trim().strip_prefix('e').and_then(|r| r.split_once('@')).ok_or_else(bad)?;
        Ok(TauEdgeRef { orbit: o.parse().map_err(|_| bad())?, level: l.parse().map_err(|_| bad())? })
    }
}

/// Data of tetrahedron orbit `r` at level 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TetOrbit {
    pub bottom: EdgeId,
    /// `[a, b, c, d]`; `(a, c)` and `(b, d)` are opposite.
    pub sides: [EdgeId; 4],
    pub below: [TriangleId; 2],
}

/// A tetrahedron of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tet {
    pub step: Step,
    pub bottom: EdgeId,
    pub top: EdgeId,
    pub sides: [EdgeId; 4],
    pub below: [TriangleId; 2],
    pub above: [TriangleId; 2],
}

/// Exact flat data for torus components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatModel {
    /// Vector of edge orbit `r` at level 0.
    pub vectors: Vec<Vec2>,
    /// `vector(s + m) = period_maps[component(s)] · vector(s)`, up to sign.
    pub period_maps: Vec<Mat2>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeeringComplex {
    spec: MonodromySpec,
    period: i64,
    chi: i64,
    tets: Vec<TetOrbit>,
    edge_death: Vec<Step>,
    tri_death: Vec<[Step; 2]>,
    edge_comp: Vec<usize>,
    /// Component of `s + m` given the component of `s`.
    comp_shift: Vec<usize>,
    flat: Option<FlatModel>,
    colors: Option<Vec<Color>>,
}

impl VeeringComplex {
    /// Builds the complex and validates that it is veering.
    pub fn build(spec: &MonodromySpec) -> Result<VeeringComplex> {
        let mut c = VeeringComplex::build_unchecked(spec)?;
        c.colors = Some(color_complex(&c)?);
        Ok(c)
    }

    /// Builds the layered complex without the veering check.
    pub fn build_unchecked(spec: &MonodromySpec) -> Result<VeeringComplex> {
        let script = spec.to_script()?;
        let mut c = unroll(&script)?;
        c.spec = spec.clone();
        if c.flat.is_some() {
            for comp in 0..c.component_count() {
                let r = c.return_map(comp)?;
                if r.trace().abs() <= 2 {
                    return Err(Error::NotPseudoAnosov(format!("return map of component {comp} has trace {}", r.trace())));
                }
            }
        }
        Ok(c)
    }

    pub fn spec(&self) -> &MonodromySpec {
        &self.spec
    }

    /// Number of tetrahedra (flip events) per period.
    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn tetrahedra_per_period(&self) -> usize {
        self.period as usize
    }

    /// Euler characteristic of the fiber.
    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn edges_per_section(&self) -> usize {
        (-3 * self.chi) as usize
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.colors.as_ref().map(|c| c[self.orbit(e)])
    }

    pub fn flat(&self) -> Option<&FlatModel> {
        self.flat.as_ref()
    }

    pub fn tet_orbits(&self) -> &[TetOrbit] {
        &self.tets
    }

    pub fn orbit(&self, s: Step) -> usize {
        s.rem_euclid(self.period) as usize
    }

    pub fn level(&self, s: Step) -> i64 {
        s.div_euclid(self.period)
    }

    pub fn edge_ref(&self, e: EdgeId) -> TauEdgeRef {
        TauEdgeRef { orbit: self.orbit(e), level: self.level(e) }
    }

    pub fn edge_id(&self, r: TauEdgeRef) -> Result<EdgeId> {
        if r.orbit as i64 >= self.period {
            return Err(Error::Invalid(format!("edge orbit {} out of range", r.orbit)));
        }
        Ok(r.level * self.period + r.orbit as i64)
    }

    pub fn tet(&self, s: Step) -> Tet {
        let o = &self.tets[self.orbit(s)];
        let shift = self.level(s) * self.period;
        Tet {
            step: s,
            bottom: o.bottom + shift,
            top: s,
            sides: o.sides.map(|x| x + shift),
            below: o.below.map(|t| t + 2 * shift),
            above: [2 * s, 2 * s + 1],
        }
    }

    pub fn edge_birth(&self, e: EdgeId) -> Step {
        e
    }

    pub fn edge_death(&self, e: EdgeId) -> Step {
        self.edge_death[self.orbit(e)] + self.level(e) * self.period
    }

    pub fn triangle_birth(&self, t: TriangleId) -> Step {
        t.div_euclid(2)
    }

    pub fn triangle_death(&self, t: TriangleId) -> Step {
        let s = t.div_euclid(2);
        self.tri_death[self.orbit(s)][t.rem_euclid(2) as usize] + self.level(s) * self.period
    }

    pub fn triangle_sides(&self, t: TriangleId) -> [EdgeId; 3] {
        let tet = self.tet(t.div_euclid(2));
        let [a, b, c, d] = tet.sides;
        if t.rem_euclid(2) == 0 {
            [tet.top, d, a]
        } else {
            [tet.top, b, c]
        }
    }

    pub fn preds(&self, s: Step) -> [Step; 2] {
        self.tet(s).below.map(|t| self.triangle_birth(t))
    }

    pub fn succs(&self, s: Step) -> [Step; 2] {
        [self.triangle_death(2 * s), self.triangle_death(2 * s + 1)]
    }

    /// Longest edge lifetime `death − birth`.
    pub fn max_lifetime(&self) -> i64 {
        (0..self.period).map(|r| self.edge_death[r as usize] - r).max().unwrap_or(1)
    }

    /// Largest gap between a tetrahedron and its predecessors.
    pub fn max_pred_gap(&self) -> i64 {
        (0..self.period).flat_map(|s| self.preds(s).map(|p| s - p)).max().unwrap_or(1)
    }

    pub fn component_count(&self) -> usize {
        self.comp_shift.len()
    }

    pub fn component(&self, e: EdgeId) -> usize {
        let mut c = self.edge_comp[self.orbit(e)];
        let lv = self.level(e);
        if lv >= 0 {
            for _ in 0..lv {
                c = self.comp_shift[c];
            }
        } else {
            let inv = self.comp_unshift();
            for _ in 0..-lv {
                c = inv[c];
            }
        }
        c
    }

    fn comp_unshift(&self) -> Vec<usize> {
        let mut inv = vec![0; self.comp_shift.len()];
        for (i, &j) in self.comp_shift.iter().enumerate() {
            inv[j] = i;
        }
        inv
    }

    /// Number of levels after which a component returns to itself.
    pub fn component_cycle(&self, comp: usize) -> i64 {
        let mut c = self.comp_shift[comp];
        let mut k = 1;
        while c != comp {
            c = self.comp_shift[c];
            k += 1;
        }
        k
    }

    /// Return map of a torus component: `vector(s + k·m) = R · vector(s)`.
    pub fn return_map(&self, comp: usize) -> Result<Mat2> {
        let flat = self.flat.as_ref().ok_or_else(|| Error::ModelUnsupported("no flat structure".into()))?;
        let mut m = Mat2::IDENTITY;
        let mut c = comp;
        loop {
            m = flat.period_maps[c].mul(&m)?;
            c = self.comp_shift[c];
            if c == comp {
                return Ok(m);
            }
        }
    }

    /// Lattice vector of a τ-edge in its torus component.
    pub fn vector(&self, e: EdgeId) -> Result<Vec2> {
        let flat = self.flat.as_ref().ok_or_else(|| Error::ModelUnsupported("no flat structure".into()))?;
        let r = self.orbit(e);
        let mut v = flat.vectors[r];
        let mut c = self.edge_comp[r];
        let lv = self.level(e);
        if lv >= 0 {
            for _ in 0..lv {
                v = flat.period_maps[c].apply(v)?;
                c = self.comp_shift[c];
            }
        } else {
            let unshift = self.comp_unshift();
            for _ in 0..-lv {
                c = unshift[c];
                v = flat.period_maps[c].inverse_unimodular()?.apply(v)?;
            }
        }
        Ok(v)
    }

    /// Exact eigendirections `(λ⁻, λ⁺)` of a torus component; `λ⁺` is
    /// the limit of edge directions at level `+∞`.
    pub fn laminations(&self, comp: usize) -> Result<[[QuadNum; 2]; 2]> {
        let r = self.return_map(comp)?;
        let [[a, b], [_, d]] = r.0;
        let t = r.trace();
        let disc: BigInt = BigInt::from(t) * BigInt::from(t) - BigInt::from(4);
        let sg = if t > 0 { 1 } else { -1 };
        let x = QuadNum::integer(2 * b);
        let y = |eps: i128| QuadNum::new(BigInt::from(d - a), BigInt::from(eps * sg), BigInt::from(1), disc.clone());
        Ok([[x.clone(), y(-1)], [x, y(1)]])
    }

    /// Whether the two edges have crossing interiors.
    pub fn crosses(&self, e: EdgeId, f: EdgeId) -> Result<bool> {
        if e == f {
            return Ok(false);
        }
        if self.flat.is_some() {
            if self.component(e) != self.component(f) {
                return Ok(false);
            }
            return Ok(self.vector(e)?.det(self.vector(f)?)?.abs() >= 2);
        }
        Ok(self.crosses_combinatorially(e, f))
    }

    /// Crossing from the poset alone: edges are disjoint iff some section
    /// contains both.
    pub fn crosses_combinatorially(&self, e: EdgeId, f: EdgeId) -> bool {
        e != f && (self.tet_le(self.edge_death(e), f) || self.tet_le(self.edge_death(f), e))
    }

    /// `a ≤ b` in the tetrahedron poset.
    pub fn tet_le(&self, a: Step, b: Step) -> bool {
        if a > b {
            return false;
        }
        let mut stack = vec![b];
        let mut seen = HashSet::new();
        while let Some(x) = stack.pop() {
            if x == a {
                return true;
            }
            for p in self.preds(x) {
                if p >= a && seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        false
    }

    /// The initial triangulation in global ids.
    pub fn layer_triangles(&self, k: Step) -> BTreeMap<TriangleId, [EdgeId; 3]> {
        let lo = k - 2 * self.max_lifetime() - 2;
        let mut out = BTreeMap::new();
        for s in lo..k {
            for t in [2 * s, 2 * s + 1] {
                if self.triangle_death(t) >= k {
                    out.insert(t, self.triangle_sides(t));
                }
            }
        }
        out
    }
}

/// Resolves a script-local id to a global id by following the relabeling
/// backward one period at a time.
fn resolve(id: i64, base: i64, inverse: &BTreeMap<i64, i64>, per_level: i64, limit: usize) -> Result<i64> {
    let mut cur = id;
    let mut shift = 0;
    for _ in 0..=limit {
        if cur >= base {
            return Ok(cur - base - shift);
        }
        cur = *inverse.get(&cur).ok_or_else(|| Error::BadScript(format!("id {cur} missing from relabeling")))?;
        shift += per_level;
    }
    Err(Error::BadScript(format!("id {id} is never flipped")))
}

fn resolve_death(id: i64, killed: &BTreeMap<i64, Step>, forward: &BTreeMap<i64, i64>, m: i64, limit: usize) -> Result<Step> {
    let mut cur = id;
    let mut shift = 0;
    for _ in 0..=limit {
        if let Some(&k) = killed.get(&cur) {
            return Ok(k + shift);
        }
        cur = *forward.get(&cur).ok_or_else(|| Error::BadScript(format!("id {cur} missing from relabeling")))?;
        shift += m;
    }
    Err(Error::BadScript(format!("id {id} is never flipped")))
}

fn unroll(script: &FlipScript) -> Result<VeeringComplex> {
    let bad = |e: Error| Error::BadScript(e.to_string());
    let init = &script.initial;
    init.validate().map_err(bad)?;
    let n = init.edge_count() as i64;
    let nf = init.triangle_count() as i64;
    if init.edges() != (0..n).collect::<BTreeSet<_>>() {
        return Err(Error::BadScript("initial edges must be numbered 0..n".into()));
    }
    if init.triangles().keys().copied().collect::<Vec<_>>() != (0..nf).collect::<Vec<_>>() {
        return Err(Error::BadScript("initial triangles must be numbered 0..f".into()));
    }
    let m = script.flips.len() as i64;
    if m == 0 {
        return Err(Error::BadScript("empty flip sequence".into()));
    }

    // components of the initial triangulation
    let comps = init.components();
    let mut tri_comp: BTreeMap<TriangleId, usize> = BTreeMap::new();
    for (i, c) in comps.iter().enumerate() {
        for &t in c {
            tri_comp.insert(t, i);
        }
    }
    let mut edge_comp_sim: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (t, s) in init.triangles() {
        for &e in s {
            edge_comp_sim.insert(e, tri_comp[t]);
        }
    }

    let mut tri = init.clone();
    let mut records: Vec<FlipRecord> = Vec::new();
    let mut edge_killed: BTreeMap<EdgeId, Step> = BTreeMap::new();
    let mut tri_killed: BTreeMap<TriangleId, Step> = BTreeMap::new();
    let mut vectors = Vec::new();
    for (i, &e) in script.flips.iter().enumerate() {
        let i = i as i64;
        let (next, rec) = tri
            .flip_with_ids(e, n + i, [nf + 2 * i, nf + 2 * i + 1])
            .map_err(|err| Error::BadScript(format!("flip {i} of edge {e}: {err}")))?;
        edge_killed.insert(e, i);
        tri_killed.insert(rec.quad.t, i);
        tri_killed.insert(rec.quad.t2, i);
        let c = edge_comp_sim[&e];
        edge_comp_sim.insert(n + i, c);
        if let Some(v) = next.vector(n + i) {
            vectors.push(v);
        }
        records.push(rec);
        tri = next;
    }

    // the relabeling must be a simplicial isomorphism onto the initial triangulation
    let rho = &script.relabel;
    let final_edges = tri.edges();
    if rho.keys().copied().collect::<BTreeSet<_>>() != final_edges
        || rho.values().copied().collect::<BTreeSet<_>>() != init.edges()
    {
        return Err(Error::BadScript("relabeling is not a bijection onto the initial edges".into()));
    }
    let renamed = tri.relabel_edges(rho).map_err(bad)?;
    if !renamed.same_cells(init) {
        return Err(Error::BadScript("relabeling is not a simplicial isomorphism".into()));
    }
    // triangle map: final triangle -> (initial triangle, rotation)
    let mut used = BTreeSet::new();
    let mut tau: BTreeMap<TriangleId, (TriangleId, usize)> = BTreeMap::new();
    for (&tf, s) in tri.triangles() {
        let img = s.map(|e| rho[&e]);
        let hit = init.triangles().iter().find_map(|(&ti, si)| {
            if used.contains(&ti) {
                return None;
            }
            (0..3).find(|&r| [si[r], si[(r + 1) % 3], si[(r + 2) % 3]] == img).map(|r| (ti, r))
        });
        let (ti, r) = hit.ok_or_else(|| Error::BadScript(format!("final triangle {tf} has no image")))?;
        debug_assert_eq!(rotate_min(img), rotate_min(init.triangles()[&ti]));
        used.insert(ti);
        tau.insert(tf, (ti, r));
    }

    let rho_inv: BTreeMap<i64, i64> = rho.iter().map(|(&f, &i)| (i, f)).collect();
    let tau_fwd: BTreeMap<i64, i64> = tau.iter().map(|(&f, &(i, _))| (f, i)).collect();
    let tau_inv: BTreeMap<i64, i64> = tau.iter().map(|(&f, &(i, _))| (i, f)).collect();
    let limit = (n + nf) as usize + 2;
    let glob_edge = |id: EdgeId| resolve(id, n, &rho_inv, m, limit);
    let glob_tri = |id: TriangleId| resolve(id, nf, &tau_inv, 2 * m, limit);

    let mut tets = Vec::new();
    for rec in &records {
        let q = rec.quad;
        tets.push(TetOrbit {
            bottom: glob_edge(q.e)?,
            sides: [glob_edge(q.a)?, glob_edge(q.b)?, glob_edge(q.c)?, glob_edge(q.d)?],
            below: [glob_tri(q.t)?, glob_tri(q.t2)?],
        });
    }
    let mut edge_death = Vec::new();
    let mut tri_death = Vec::new();
    for r in 0..m {
        edge_death.push(resolve_death(n + r, &edge_killed, rho, m, limit)?);
        tri_death.push([
            resolve_death(nf + 2 * r, &tri_killed, &tau_fwd, m, limit)?,
            resolve_death(nf + 2 * r + 1, &tri_killed, &tau_fwd, m, limit)?,
        ]);
    }

    // component shift: comp(s + m) = iota^{-1}(comp(s))
    let k = comps.len();
    let mut iota = vec![usize::MAX; k];
    for (&x, &i) in rho {
        let (cf, ci) = (edge_comp_sim[&x], edge_comp_sim[&i]);
        if iota[cf] != usize::MAX && iota[cf] != ci {
            return Err(Error::BadScript("relabeling splits a component".into()));
        }
        iota[cf] = ci;
    }
    let mut comp_shift = vec![usize::MAX; k];
    for (cf, &ci) in iota.iter().enumerate() {
        comp_shift[ci] = cf;
    }
    if comp_shift.contains(&usize::MAX) {
        return Err(Error::BadScript("relabeling is not a bijection on components".into()));
    }
    let edge_comp: Vec<usize> = (0..m).map(|r| edge_comp_sim[&(n + r)]).collect();

    let flat = match (init.flat(), tri.flat()) {
        (Some(fi), Some(ff)) => {
            let mut period_maps = vec![Mat2::IDENTITY; k];
            for b in 0..k {
                let target = comp_shift[b];
                let (&tf, &(ti, rot)) = tau
                    .iter()
                    .find(|(tf, _)| tri_comp_of(&tri, **tf, &edge_comp_sim) == target)
                    .ok_or_else(|| Error::BadScript("component without triangles".into()))?;
                let sf = tri.triangles()[&tf];
                let si = init.triangles()[&ti];
                let sv = |flat: &crate::fiber::triangulation::FlatData, t: TriangleId, s: &[EdgeId; 3], k: usize| {
                    let v = flat.vectors[&s[k]];
                    if flat.signs[&t][k] > 0 {
                        v
                    } else {
                        v.neg()
                    }
                };
                let w: Vec<Vec2> = (0..3).map(|j| sv(fi, ti, &si, (j + rot) % 3)).collect();
                let v: Vec<Vec2> = (0..3).map(|j| sv(ff, tf, &sf, j)).collect();
                let wm = Mat2([[w[0].x, w[1].x], [w[0].y, w[1].y]]);
                let vm = Mat2([[v[0].x, v[1].x], [v[0].y, v[1].y]]);
                let p = vm.mul(&wm.inverse_unimodular().map_err(bad)?)?;
                if p.apply(w[2])? != v[2] {
                    return Err(Error::BadScript("relabeling is not affine on a flat component".into()));
                }
                if p.det()? != 1 {
                    return Err(Error::BadScript("relabeling reverses orientation".into()));
                }
                for (&x, &i) in rho {
                    if edge_comp_sim[&i] == b {
                        let img = p.apply(fi.vectors[&i])?;
                        let got = ff.vectors[&x];
                        if img != got && img != got.neg() {
                            return Err(Error::BadScript(format!("edge {x} is not the image of edge {i}")));
                        }
                    }
                }
                period_maps[b] = p;
            }
            Some(FlatModel { vectors, period_maps })
        }
        _ => None,
    };

    let c = VeeringComplex {
        spec: MonodromySpec::Script(script.clone()),
        period: m,
        chi: init.euler_characteristic(),
        tets,
        edge_death,
        tri_death,
        edge_comp,
        comp_shift,
        flat,
        colors: None,
    };
    c.check_structure()?;
    Ok(c)
}

fn tri_comp_of(tri: &IdealTriangulation, t: TriangleId, edge_comp: &BTreeMap<EdgeId, usize>) -> usize {
    edge_comp[&tri.triangles()[&t][0]]
}

impl VeeringComplex {
    /// Structural invariants: every edge orbit is the top of one orbit and
    /// the bottom of one orbit, and lifetimes are positive.
    pub fn check_structure(&self) -> Result<()> {
        let m = self.period;
        let mut bottoms = vec![0; m as usize];
        for t in &self.tets {
            bottoms[self.orbit(t.bottom)] += 1;
        }
        if bottoms.iter().any(|&b| b != 1) {
            return Err(Error::BadScript("an edge orbit is not the bottom of exactly one tetrahedron orbit".into()));
        }
        for r in 0..m {
            if self.edge_death[r as usize] <= r || self.bottom_of_death(r) != r {
                return Err(Error::BadScript(format!("edge orbit {r} has an inconsistent lifetime")));
            }
            for p in self.preds(r) {
                if p >= r {
                    return Err(Error::BadScript(format!("tetrahedron {r} lies below its own predecessor")));
                }
            }
        }
        let base = self.layer_triangles(0);
        let edges: BTreeSet<EdgeId> = base.values().flatten().copied().collect();
        if base.len() as i64 != -2 * self.chi || edges.len() as i64 != -3 * self.chi {
            return Err(Error::BadScript("layer 0 is not a triangulation of the fiber".into()));
        }
        Ok(())
    }

    fn bottom_of_death(&self, e: EdgeId) -> EdgeId {
        self.tet(self.edge_death(e)).bottom
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(w: &str) -> VeeringComplex {
        VeeringComplex::build(&MonodromySpec::word(w)).unwrap()
    }

    #[test]
    fn periods() {
        assert_eq!(build("RL").tetrahedra_per_period(), 2);
        assert_eq!(build("RRL").tetrahedra_per_period(), 3);
        assert_eq!(build("RRLL").tetrahedra_per_period(), 4);
    }

    #[test]
    fn rl_edges() {
        let c = build("RL");
        // step 0 is R: flips v = (0,1) into 2u+v
        let v = c.vector(0).unwrap();
        assert!(v == Vec2::new(2, 1) || v == Vec2::new(-2, -1));
        // the initial edge 1/0 was created two periods earlier, as orbit 1
        assert_eq!(c.tet(0).bottom, -3);
        assert_eq!(c.edge_ref(-3), TauEdgeRef { orbit: 1, level: -2 });
        assert_eq!(c.vector(-3).unwrap().slope().unwrap().to_string(), "1/0");
        let m = Mat2([[2, 1], [1, 1]]);
        for s in -6..6 {
            let v = c.vector(s).unwrap();
            let w = c.vector(s + 2).unwrap();
            let img = m.apply(v).unwrap();
            assert!(w == img || w == img.neg());
        }
    }

    #[test]
    fn base_layer_matches_initial_slopes() {
        let c = build("RRL");
        let layer = c.layer_triangles(0);
        let mut slopes: Vec<String> =
            layer.values().flatten().collect::<BTreeSet<_>>().iter().map(|&&e| c.vector(e).unwrap().slope().unwrap().to_string()).collect();
        slopes.sort();
        assert_eq!(slopes, vec!["0/1", "1/0", "1/1"]);
    }
}
