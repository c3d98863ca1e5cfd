//! Ideal triangulations of punctured surfaces, with diagonal flips.
//!
//! A triangle lists its three sides counterclockwise; side `k` runs from
//! corner `k` to corner `k+1`. The two sides carrying an edge traverse it
//! in opposite directions. An optional flat structure assigns each edge a
//! lattice vector and each side a sign, so that the signed side vectors of
//! every triangle sum to zero.

use super::slope::Vec2;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

pub type EdgeId = i64;
pub type TriangleId = i64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatData {
    pub vectors: BTreeMap<EdgeId, Vec2>,
    pub signs: BTreeMap<TriangleId, [i8; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealTriangulation {
    triangles: BTreeMap<TriangleId, [EdgeId; 3]>,
    flat: Option<FlatData>,
}

/// Where an edge sits: `(triangle, side)` for each of its two sides.
pub type Sides = [(TriangleId, usize); 2];

/// The quadrilateral around a flipped edge `e`. With `e` running `P → Q`
/// in `t`, the sides are `a: Q→R`, `b: R→P` in `t` and `c: P→S`, `d: S→Q`
/// in `t2`. Opposite pairs are `(a, c)` and `(b, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub e: EdgeId,
    pub t: TriangleId,
    pub t2: TriangleId,
    pub a: EdgeId,
    pub b: EdgeId,
    pub c: EdgeId,
    pub d: EdgeId,
    side_t: usize,
    side_t2: usize,
}

/// Result of a flip: the new edge and the two new triangles
/// `[f, d, a]` and `[f, b, c]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipRecord {
    pub quad: Quad,
    pub f: EdgeId,
    pub upper: [TriangleId; 2],
}

impl IdealTriangulation {
    pub fn new(triangles: impl IntoIterator<Item = (TriangleId, [EdgeId; 3])>) -> Result<Self> {
        let t = IdealTriangulation { triangles: triangles.into_iter().collect(), flat: None };
        t.validate()?;
        Ok(t)
    }

    pub fn with_flat(mut self, flat: FlatData) -> Result<Self> {
        self.flat = Some(flat);
        self.validate()?;
        Ok(self)
    }

    /// The once-punctured torus with edges `0 = 0/1`... in vector form
    /// `0 ↦ (1,0)`, `1 ↦ (0,1)`, `2 ↦ (1,1)`.
    pub fn square_torus() -> Self {
        let flat = FlatData {
            vectors: [(0, Vec2::new(1, 0)), (1, Vec2::new(0, 1)), (2, Vec2::new(1, 1))].into(),
            signs: [(0, [1, 1, -1]), (1, [1, -1, -1])].into(),
        };
        IdealTriangulation { triangles: [(0, [0, 1, 2]), (1, [2, 0, 1])].into(), flat: Some(flat) }
    }

    pub fn triangles(&self) -> &BTreeMap<TriangleId, [EdgeId; 3]> {
        &self.triangles
    }

    pub fn flat(&self) -> Option<&FlatData> {
        self.flat.as_ref()
    }

    pub fn vector(&self, e: EdgeId) -> Option<Vec2> {
        self.flat.as_ref().and_then(|f| f.vectors.get(&e).copied())
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.triangles.values().flatten().copied().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Euler characteristic of the punctured surface, `F − E`.
    pub fn euler_characteristic(&self) -> i64 {
        self.triangle_count() as i64 - self.edge_count() as i64
    }

    pub fn sides(&self, e: EdgeId) -> Result<Sides> {
        let mut found = Vec::with_capacity(2);
        for (&t, sides) in &self.triangles {
            for (k, &x) in sides.iter().enumerate() {
                if x == e {
                    found.push((t, k));
                }
            }
        }
        match found.as_slice() {
            [s0, s1] => Ok([*s0, *s1]),
            [] => Err(Error::UnknownEdge(e)),
            _ => Err(Error::Invalid(format!("edge {e} lies on {} sides", found.len()))),
        }
    }

    /// Ideal vertex classes as sets of corners `(triangle, corner)`.
    pub fn vertex_classes(&self) -> Vec<BTreeSet<(TriangleId, usize)>> {
        let corners: Vec<(TriangleId, usize)> =
            self.triangles.keys().flat_map(|&t| (0..3).map(move |k| (t, k))).collect();
        let index: BTreeMap<_, _> = corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut uf = UnionFind::new(corners.len());
        for e in self.edges() {
            if let Ok([(t, k), (t2, k2)]) = self.sides(e) {
                uf.union(index[&(t, k)], index[&(t2, (k2 + 1) % 3)]);
                uf.union(index[&(t, (k + 1) % 3)], index[&(t2, k2)]);
            }
        }
        let mut classes: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
        for (i, &c) in corners.iter().enumerate() {
            classes.entry(uf.find(i)).or_default().insert(c);
        }
        classes.into_values().collect()
    }

    pub fn puncture_count(&self) -> usize {
        self.vertex_classes().len()
    }

    /// Genus of the closed surface obtained by filling the punctures;
    /// `None` for disconnected surfaces.
    pub fn genus(&self) -> Option<i64> {
        if self.components().len() != 1 {
            return None;
        }
        let closed = self.puncture_count() as i64 + self.euler_characteristic();
        Some((2 - closed) / 2)
    }

    /// Connected components as sets of triangles.
    pub fn components(&self) -> Vec<BTreeSet<TriangleId>> {
        let ids: Vec<TriangleId> = self.triangles.keys().copied().collect();
        let index: BTreeMap<_, _> = ids.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut uf = UnionFind::new(ids.len());
        for e in self.edges() {
            if let Ok([(t, _), (t2, _)]) = self.sides(e) {
                uf.union(index[&t], index[&t2]);
            }
        }
        let mut comps: BTreeMap<usize, BTreeSet<TriangleId>> = BTreeMap::new();
        for (i, &t) in ids.iter().enumerate() {
            comps.entry(uf.find(i)).or_default().insert(t);
        }
        let mut out: Vec<_> = comps.into_values().collect();
        out.sort();
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.triangles.is_empty() {
            return Err(Error::Invalid("no triangles".into()));
        }
        let mut count: BTreeMap<EdgeId, usize> = BTreeMap::new();
        for &e in self.triangles.values().flatten() {
            *count.entry(e).or_default() += 1;
        }
        if let Some((e, n)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(Error::Invalid(format!("edge {e} lies on {n} sides")));
        }
        let chi = self.euler_characteristic();
        if chi >= 0 || 2 * self.edge_count() as i64 != -6 * chi || self.triangle_count() as i64 != -2 * chi {
            return Err(Error::Invalid(format!(
                "Euler count fails: {} edges, {} triangles",
                self.edge_count(),
                self.triangle_count()
            )));
        }
        if let Some(flat) = &self.flat {
            for (&t, sides) in &self.triangles {
                let signs = flat.signs.get(&t).ok_or_else(|| Error::Invalid(format!("no signs for triangle {t}")))?;
                let mut sum = Vec2::new(0, 0);
                for k in 0..3 {
                    let v = *flat.vectors.get(&sides[k]).ok_or(Error::UnknownEdge(sides[k]))?;
                    sum = sum.add(if signs[k] > 0 { v } else { v.neg() })?;
                }
                if !sum.is_zero() {
                    return Err(Error::Invalid(format!("triangle {t} does not close up")));
                }
            }
            for e in count.keys() {
                let [(t, k), (t2, k2)] = self.sides(*e)?;
                if flat.signs[&t][k] == flat.signs[&t2][k2] {
                    return Err(Error::Invalid(format!("edge {e} glued without reversing")));
                }
            }
        }
        Ok(())
    }

    pub fn quad(&self, e: EdgeId) -> Result<Quad> {
        let [(t, k), (t2, k2)] = self.sides(e)?;
        if t == t2 {
            return Err(Error::FlipIllegal(e));
        }
        let s = &self.triangles[&t];
        let s2 = &self.triangles[&t2];
        Ok(Quad {
            e,
            t,
            t2,
            a: s[(k + 1) % 3],
            b: s[(k + 2) % 3],
            c: s2[(k2 + 1) % 3],
            d: s2[(k2 + 2) % 3],
            side_t: k,
            side_t2: k2,
        })
    }

    /// Flip `e`, naming the new edge and triangles with fresh ids.
    pub fn flip(&self, e: EdgeId) -> Result<(IdealTriangulation, FlipRecord)> {
        let f = self.edges().last().copied().unwrap_or(0).max(e) + 1;
        let t0 = self.triangles.keys().last().copied().unwrap_or(0) + 1;
        self.flip_with_ids(e, f, [t0, t0 + 1])
    }

    pub fn flip_with_ids(&self, e: EdgeId, f: EdgeId, upper: [TriangleId; 2]) -> Result<(IdealTriangulation, FlipRecord)> {
        let q = self.quad(e)?;
        let mut triangles = self.triangles.clone();
        triangles.remove(&q.t);
        triangles.remove(&q.t2);
        if triangles.contains_key(&upper[0]) || triangles.contains_key(&upper[1]) || upper[0] == upper[1] {
            return Err(Error::Invalid("flip would reuse a triangle id".into()));
        }
        if self.edges().contains(&f) {
            return Err(Error::Invalid(format!("flip would reuse edge id {f}")));
        }
        triangles.insert(upper[0], [f, q.d, q.a]);
        triangles.insert(upper[1], [f, q.b, q.c]);
        let flat = match &self.flat {
            None => None,
            Some(flat) => {
                let sign = |t: TriangleId, k: usize| flat.signs[&t][k];
                let sv = |t: TriangleId, k: usize| {
                    let v = flat.vectors[&self.triangles[&t][k]];
                    if sign(t, k) > 0 {
                        v
                    } else {
                        v.neg()
                    }
                };
                let (k, k2) = (q.side_t, q.side_t2);
                // f runs S → R: R − S = −(b + c)
                let fv = sv(q.t, (k + 2) % 3).add(sv(q.t2, (k2 + 1) % 3))?.neg();
                let mut vectors = flat.vectors.clone();
                vectors.remove(&e);
                vectors.insert(f, fv);
                let mut signs = flat.signs.clone();
                signs.remove(&q.t);
                signs.remove(&q.t2);
                signs.insert(upper[0], [-1, sign(q.t2, (k2 + 2) % 3), sign(q.t, (k + 1) % 3)]);
                signs.insert(upper[1], [1, sign(q.t, (k + 2) % 3), sign(q.t2, (k2 + 1) % 3)]);
                Some(FlatData { vectors, signs })
            }
        };
        let out = IdealTriangulation { triangles, flat };
        out.validate()?;
        Ok((out, FlipRecord { quad: q, f, upper }))
    }

    /// Stable fingerprint of the combinatorial triangulation.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.triangles.hash(&mut h);
        h.finish()
    }

    /// Rename edges, keeping triangle ids.
    pub fn relabel_edges(&self, map: &BTreeMap<EdgeId, EdgeId>) -> Result<IdealTriangulation> {
        let look = |e: &EdgeId| map.get(e).copied().ok_or(Error::UnknownEdge(*e));
        let mut triangles = BTreeMap::new();
        for (&t, s) in &self.triangles {
            triangles.insert(t, [look(&s[0])?, look(&s[1])?, look(&s[2])?]);
        }
        let flat = match &self.flat {
            None => None,
            Some(f) => Some(FlatData {
                vectors: f.vectors.iter().map(|(e, v)| Ok((look(e)?, *v))).collect::<Result<_>>()?,
                signs: f.signs.clone(),
            }),
        };
        let out = IdealTriangulation { triangles, flat };
        out.validate()?;
        Ok(out)
    }

    /// Whether the two triangulations agree up to renaming triangles,
    /// with each triangle's sides matched up to rotation.
    pub fn same_cells(&self, o: &IdealTriangulation) -> bool {
        let canon = |t: &IdealTriangulation| {
            let mut v: Vec<[EdgeId; 3]> = t.triangles.values().map(|s| rotate_min(*s)).collect();
            v.sort();
            v
        };
        canon(self) == canon(o)
    }
}

pub(crate) fn rotate_min(s: [EdgeId; 3]) -> [EdgeId; 3] {
    (0..3).map(|r| [s[r], s[(r + 1) % 3], s[(r + 2) % 3]]).min().unwrap()
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::slope::Slope;

    fn slopes(t: &IdealTriangulation) -> BTreeSet<Slope> {
        t.edges().iter().map(|&e| t.vector(e).unwrap().slope().unwrap()).collect()
    }

    #[test]
    fn torus_counts() {
        let t = IdealTriangulation::square_torus();
        assert_eq!(t.euler_characteristic(), -1);
        assert_eq!(t.puncture_count(), 1);
        assert_eq!(t.genus(), Some(1));
    }

    #[test]
    fn flip_diagonal_of_square() {
        let t = IdealTriangulation::square_torus();
        let (t2, rec) = t.flip(2).unwrap();
        let want: BTreeSet<Slope> = ["0/1", "1/0", "-1/1"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(slopes(&t2), want);
        for (x, y) in [(0, 1), (0, rec.f), (1, rec.f)] {
            assert_eq!(t2.vector(x).unwrap().det(t2.vector(y).unwrap()).unwrap().abs(), 1);
        }
        assert_eq!((rec.quad.a, rec.quad.c), (0, 0));
        assert_eq!((rec.quad.b, rec.quad.d), (1, 1));
    }

    #[test]
    fn flip_is_involutive() {
        let t = IdealTriangulation::square_torus();
        let (t2, rec) = t.flip(2).unwrap();
        let (t3, rec2) = t2.flip(rec.f).unwrap();
        let back = t3.relabel_edges(&[(0, 0), (1, 1), (rec2.f, 2)].into()).unwrap();
        assert!(back.same_cells(&t));
        assert_eq!(slopes(&back), slopes(&t));
    }

    #[test]
    fn self_glued_edge_is_illegal() {
        // a triangle whose sides 0 and 1 carry the same edge cannot be flipped there
        let t = IdealTriangulation { triangles: [(0, [5, 5, 6]), (1, [6, 7, 7])].into(), flat: None };
        assert_eq!(t.quad(5).unwrap_err(), Error::FlipIllegal(5));
    }
}
