//! Arc and curve classes, their intersection numbers, and normal coordinates.
//!
//! Normal coordinates count transverse crossings with each edge of a
//! reference triangulation. An arc that is itself an edge of the reference
//! has all-zero coordinates and names that edge in `along`; in the flip
//! rule such an edge counts as `−1`.

use super::slope::{Slope, Vec2};
use super::triangulation::{EdgeId, FlipRecord, IdealTriangulation};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcKind {
    /// An ideal arc with both ends at punctures.
    Arc,
    /// An essential simple closed curve.
    Curve,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcClass {
    Slope { slope: Slope, kind: ArcKind },
    Normal { reference: u64, coords: BTreeMap<EdgeId, u64>, along: Option<EdgeId>, kind: ArcKind },
}

impl ArcClass {
    pub fn arc(slope: Slope) -> ArcClass {
        ArcClass::Slope { slope, kind: ArcKind::Arc }
    }

    pub fn curve(slope: Slope) -> ArcClass {
        ArcClass::Slope { slope, kind: ArcKind::Curve }
    }

    pub fn kind(&self) -> ArcKind {
        match self {
            ArcClass::Slope { kind, .. } | ArcClass::Normal { kind, .. } => *kind,
        }
    }

    /// Normal coordinates of a straight class on a flat triangulation.
    pub fn normal_on(slope: Slope, kind: ArcKind, tri: &IdealTriangulation) -> Result<ArcClass> {
        let s = slope.vector();
        let mut coords = BTreeMap::new();
        let mut along = None;
        for e in tri.edges() {
            let v = tri.vector(e).ok_or_else(|| Error::ModelUnsupported("triangulation has no flat structure".into()))?;
            let n = s.det(v)?.unsigned_abs() as u64;
            if n == 0 {
                if kind == ArcKind::Curve {
                    coords.insert(e, 0);
                    continue;
                }
                along = Some(e);
                coords.insert(e, 0);
            } else {
                coords.insert(e, n - u64::from(kind == ArcKind::Arc));
            }
        }
        let out = ArcClass::Normal { reference: tri.fingerprint(), coords, along, kind };
        out.check_consistency(tri)?;
        Ok(out)
    }

    /// Per-triangle consistency of normal coordinates: each weight is at
    /// most the sum of the other two, plus the number of arc ends (≤ 2)
    /// that can enter the opposite corner.
    pub fn check_consistency(&self, tri: &IdealTriangulation) -> Result<()> {
        let ArcClass::Normal { reference, coords, kind, along } = self else {
            return Ok(());
        };
        if *reference != tri.fingerprint() {
            return Err(Error::IncompatibleReference);
        }
        if coords.values().all(|&c| c == 0) && along.is_none() {
            return Err(Error::Invalid("all-zero normal coordinates".into()));
        }
        let slack = if *kind == ArcKind::Arc { 2 } else { 0 };
        for sides in tri.triangles().values() {
            let w: Vec<u64> = sides.iter().map(|e| coords.get(e).copied().unwrap_or(0)).collect();
            for k in 0..3 {
                if w[k] > w[(k + 1) % 3] + w[(k + 2) % 3] + slack {
                    return Err(Error::Invalid(format!("normal coordinates {w:?} violate the triangle inequality")));
                }
            }
            if *kind == ArcKind::Curve && (w[0] + w[1] + w[2]) % 2 != 0 {
                return Err(Error::Invalid(format!("curve coordinates {w:?} have odd sum")));
            }
        }
        Ok(())
    }

    /// Update normal coordinates across a flip, with the quadrilateral
    /// exchange rule `f = max(a + c, b + d) − e`.
    pub fn track_flip(&self, rec: &FlipRecord, after: &IdealTriangulation) -> Result<ArcClass> {
        let ArcClass::Normal { coords, along, kind, .. } = self else {
            return Ok(self.clone());
        };
        let q = rec.quad;
        let w = |x: EdgeId| -> i64 {
            if *along == Some(x) {
                -1
            } else {
                coords.get(&x).copied().unwrap_or(0) as i64
            }
        };
        let f = (w(q.a) + w(q.c)).max(w(q.b) + w(q.d)) - w(q.e);
        let mut coords = coords.clone();
        coords.remove(&q.e);
        let along = if *along == Some(q.e) { None } else { *along };
        let along = if f < 0 {
            coords.insert(rec.f, 0);
            Some(rec.f)
        } else {
            coords.insert(rec.f, f as u64);
            along
        };
        Ok(ArcClass::Normal { reference: after.fingerprint(), coords, along, kind: *kind })
    }

    /// Recover the slope of a class on a flat once-punctured torus.
    pub fn to_slope(&self, tri: &IdealTriangulation) -> Result<Slope> {
        match self {
            ArcClass::Slope { slope, .. } => Ok(*slope),
            ArcClass::Normal { reference, coords, along, kind } => {
                if *reference != tri.fingerprint() {
                    return Err(Error::IncompatibleReference);
                }
                if tri.edge_count() != 3 {
                    return Err(Error::ModelUnsupported("slope recovery needs a once-punctured torus".into()));
                }
                if let Some(e) = along {
                    return tri.vector(*e).ok_or_else(|| Error::ModelUnsupported("no flat structure".into()))?.slope();
                }
                let edges: Vec<EdgeId> = tri.edges().into_iter().collect();
                let vec = |e: EdgeId| tri.vector(e).ok_or_else(|| Error::ModelUnsupported("no flat structure".into()));
                let cross = |e: EdgeId| coords.get(&e).copied().unwrap_or(0) as i128 + i128::from(*kind == ArcKind::Arc);
                let (x, y) = (vec(edges[0])?, vec(edges[1])?);
                let det = x.det(y)?;
                for sy in [1, -1] {
                    let (al, be) = (cross(edges[0]), sy * cross(edges[1]));
                    // s·(x2, −x1) = al and s·(y2, −y1) = be
                    let s1 = (al * -y.x - be * -x.x) * det;
                    let s2 = (x.y * be - y.y * al) * det;
                    let s = Vec2::new(s1, s2);
                    if s.is_zero() || !s.is_primitive() {
                        continue;
                    }
                    let ok = edges.iter().all(|&e| vec(e).and_then(|v| s.det(v)).map(|d| d.abs() == cross(e)).unwrap_or(false));
                    if ok {
                        return s.slope();
                    }
                }
                Err(Error::Invalid("normal coordinates are not a straight class".into()))
            }
        }
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcClass::Slope { slope, kind: ArcKind::Arc } => write!(f, "arc {slope}"),
            ArcClass::Slope { slope, kind: ArcKind::Curve } => write!(f, "curve {slope}"),
            ArcClass::Normal { coords, kind, .. } => write!(f, "{kind:?} {coords:?}"),
        }
    }
}

/// Geometric intersection number of interiors.
///
/// Straight arcs `a, b` on the once-punctured torus cross `|det(a, b)| − 1`
/// times; a curve crosses any other class `|det|` times.
pub fn intersection_number(a: &ArcClass, b: &ArcClass) -> Result<u64> {
    use ArcClass::*;
    match (a, b) {
        (Slope { slope: s, kind: k }, Slope { slope: t, kind: l }) => {
            let det = s.cross(t)? as u64;
            Ok(if *k == ArcKind::Arc && *l == ArcKind::Arc { det.saturating_sub(1) } else { det })
        }
        (Normal { reference: r1, .. }, Normal { reference: r2, .. }) if r1 != r2 => Err(Error::IncompatibleReference),
        (Normal { along: Some(e), .. }, Normal { along: Some(f), .. }) => {
            // two edges of one triangulation never cross
            let _ = (e, f);
            Ok(0)
        }
        (Normal { along: Some(e), .. }, Normal { coords, .. }) | (Normal { coords, .. }, Normal { along: Some(e), .. }) => {
            Ok(coords.get(e).copied().unwrap_or(0))
        }
        (Normal { .. }, Normal { .. }) => {
            Err(Error::ModelUnsupported("intersection of two non-edge normal classes needs intersection_number_on".into()))
        }
        _ => Err(Error::IncompatibleReference),
    }
}

/// Intersection number with normal classes resolved on `tri`.
pub fn intersection_number_on(tri: &IdealTriangulation, a: &ArcClass, b: &ArcClass) -> Result<u64> {
    match intersection_number(a, b) {
        Err(Error::ModelUnsupported(_)) | Err(Error::IncompatibleReference) => {
            let sa = ArcClass::Slope { slope: a.to_slope(tri)?, kind: a.kind() };
            let sb = ArcClass::Slope { slope: b.to_slope(tri)?, kind: b.kind() };
            intersection_number(&sa, &sb)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn farey_neighbours_are_disjoint() {
        assert_eq!(intersection_number(&ArcClass::arc(s("0/1")), &ArcClass::arc(s("1/0"))).unwrap(), 0);
        assert_eq!(intersection_number(&ArcClass::arc(s("1/1")), &ArcClass::arc(s("-1/1"))).unwrap(), 1);
        assert_eq!(intersection_number(&ArcClass::curve(s("1/0")), &ArcClass::curve(s("2/3"))).unwrap(), 3);
        assert_eq!(intersection_number(&ArcClass::arc(s("1/0")), &ArcClass::arc(s("2/3"))).unwrap(), 2);
    }

    #[test]
    fn tracked_arc_keeps_crossings_with_fixed_edges() {
        let t = IdealTriangulation::square_torus();
        let arc = ArcClass::normal_on(s("2/1"), ArcKind::Arc, &t).unwrap();
        let (t2, rec) = t.flip(2).unwrap();
        let moved = arc.track_flip(&rec, &t2).unwrap();
        assert_eq!(moved, ArcClass::normal_on(s("2/1"), ArcKind::Arc, &t2).unwrap());
        for e in [0, 1] {
            let edge = ArcClass::normal_on(t.vector(e).unwrap().slope().unwrap(), ArcKind::Arc, &t2).unwrap();
            let before = intersection_number_on(&t, &arc, &ArcClass::normal_on(t.vector(e).unwrap().slope().unwrap(), ArcKind::Arc, &t).unwrap()).unwrap();
            assert_eq!(intersection_number(&moved, &edge).unwrap(), before);
        }
        assert_eq!(moved.to_slope(&t2).unwrap(), s("2/1"));
    }

    #[test]
    fn mismatched_references_are_rejected() {
        let t = IdealTriangulation::square_torus();
        let (t2, _) = t.flip(2).unwrap();
        let a = ArcClass::normal_on(s("2/1"), ArcKind::Arc, &t).unwrap();
        let b = ArcClass::normal_on(s("0/1"), ArcKind::Arc, &t2).unwrap();
        assert_eq!(intersection_number(&a, &b).unwrap_err(), Error::IncompatibleReference);
    }
}
