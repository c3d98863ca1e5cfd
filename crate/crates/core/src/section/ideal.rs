//! Sections as order ideals of tetrahedra.
//!
//! An ideal is stored as a staircase `{s < floor}` plus a finite set of
//! steps above it, normalized so that `floor` itself is not in the ideal.

use crate::error::{Error, Result};
use crate::fiber::triangulation::{EdgeId, IdealTriangulation, TriangleId};
use crate::veering::{Step, VeeringComplex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Section {
    floor: Step,
    above: BTreeSet<Step>,
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.floor)?;
        for s in &self.above {
            write!(f, " +{s}")?;
        }
        write!(f, ">")
    }
}

impl Section {
    /// The `k`-th layer of the canonical sweep-out.
    pub fn base(k: Step) -> Section {
        Section { floor: k, above: BTreeSet::new() }
    }

    /// `{s < floor} ∪ extra`, normalized.
    pub fn from_parts(floor: Step, extra: impl IntoIterator<Item = Step>) -> Section {
        let mut above: BTreeSet<Step> = extra.into_iter().filter(|&s| s >= floor).collect();
        let mut floor = floor;
        while above.remove(&floor) {
            floor += 1;
        }
        Section { floor, above }
    }

    pub fn floor(&self) -> Step {
        self.floor
    }

    pub fn above(&self) -> &BTreeSet<Step> {
        &self.above
    }

    pub fn contains(&self, s: Step) -> bool {
        s < self.floor || self.above.contains(&s)
    }

    /// Largest step in the ideal.
    pub fn top_step(&self) -> Step {
        self.above.last().copied().unwrap_or(self.floor - 1)
    }

    pub fn leq(&self, o: &Section) -> bool {
        self.floor <= o.floor && self.above.iter().all(|&s| o.contains(s))
    }

    pub fn join(&self, o: &Section) -> Section {
        let floor = self.floor.max(o.floor);
        Section::from_parts(floor, self.above.iter().chain(&o.above).copied())
    }

    pub fn meet(&self, o: &Section) -> Section {
        let floor = self.floor.min(o.floor);
        let hi = self.top_step().max(o.top_step());
        Section::from_parts(floor, (floor..=hi).filter(|&s| self.contains(s) && o.contains(s)))
    }

    /// Tetrahedra of `o` not in `self`.
    pub fn difference_from(&self, o: &Section) -> BTreeSet<Step> {
        (self.floor.min(o.floor)..=o.top_step()).filter(|&s| o.contains(s) && !self.contains(s)).collect()
    }

    /// `U(self, o)`: tetrahedra between the meet and the join.
    pub fn region(&self, o: &Section) -> BTreeSet<Step> {
        self.meet(o).difference_from(&self.join(o))
    }

    /// Translates every tetrahedron by `steps`.
    pub fn shift(&self, steps: i64) -> Section {
        Section { floor: self.floor + steps, above: self.above.iter().map(|s| s + steps).collect() }
    }

    /// `Φ^k(T)`.
    pub fn apply_deck(&self, c: &VeeringComplex, k: i64) -> Section {
        self.shift(-k * c.period())
    }

    pub fn is_phi_section(&self, c: &VeeringComplex) -> bool {
        self.apply_deck(c, 1).leq(self)
    }

    pub fn is_downward_closed(&self, c: &VeeringComplex) -> bool {
        self.above.iter().all(|&s| c.preds(s).iter().all(|&p| self.contains(p)))
    }

    fn candidates(&self, c: &VeeringComplex) -> impl Iterator<Item = Step> + '_ {
        let lo = self.floor - c.max_lifetime() - 1;
        (lo..self.floor).chain(self.above.iter().copied())
    }

    /// Edges `e` with `t_create(e) ∈ I` and `t_destroy(e) ∉ I`.
    pub fn edges(&self, c: &VeeringComplex) -> BTreeSet<EdgeId> {
        self.candidates(c).filter(|&s| !self.contains(c.edge_death(s))).collect()
    }

    pub fn has_edge(&self, c: &VeeringComplex, e: EdgeId) -> bool {
        self.contains(e) && !self.contains(c.edge_death(e))
    }

    pub fn triangles(&self, c: &VeeringComplex) -> BTreeMap<TriangleId, [EdgeId; 3]> {
        self.candidates(c)
            .flat_map(|s| [2 * s, 2 * s + 1])
            .filter(|&t| !self.contains(c.triangle_death(t)))
            .map(|t| (t, c.triangle_sides(t)))
            .collect()
    }

    /// The boundary triangulation `Π_*(T)`.
    pub fn boundary(&self, c: &VeeringComplex) -> Result<IdealTriangulation> {
        let tri = IdealTriangulation::new(self.triangles(c))?;
        if tri.edges() != self.edges(c) {
            return Err(Error::Inconsistent(format!("section {self} has edges off its triangles")));
        }
        Ok(tri)
    }

    /// Euler count and closure of the boundary.
    pub fn check(&self, c: &VeeringComplex) -> Result<()> {
        let n = self.edges(c).len();
        if n != c.edges_per_section() {
            return Err(Error::Inconsistent(format!("section {self} has {n} edges, expected {}", c.edges_per_section())));
        }
        if !self.is_downward_closed(c) {
            return Err(Error::Inconsistent(format!("section {self} is not downward closed")));
        }
        self.boundary(c).map(|_| ())
    }

    pub fn can_move_up(&self, c: &VeeringComplex, t: Step) -> bool {
        !self.contains(t) && c.preds(t).iter().all(|&p| self.contains(p))
    }

    pub fn can_move_down(&self, c: &VeeringComplex, t: Step) -> bool {
        self.contains(t) && c.succs(t).iter().all(|&p| !self.contains(p))
    }

    pub(crate) fn insert(&self, t: Step) -> Section {
        Section::from_parts(self.floor, self.above.iter().copied().chain([t]))
    }

    pub(crate) fn remove(&self, t: Step) -> Section {
        if t >= self.floor {
            let mut above = self.above.clone();
            above.remove(&t);
            Section { floor: self.floor, above }
        } else {
            Section::from_parts(t, (t + 1..self.floor).chain(self.above.iter().copied()))
        }
    }

    pub fn move_up(&self, c: &VeeringComplex, t: Step) -> Result<Section> {
        if self.contains(t) {
            return Err(Error::MoveIllegal { tet: t, reason: "tetrahedron is already below the section".into() });
        }
        if let Some(p) = c.preds(t).into_iter().find(|&p| !self.contains(p)) {
            return Err(Error::MoveIllegal { tet: t, reason: format!("bottom face from tetrahedron {p} is not on the section") });
        }
        let out = self.insert(t);
        out.check(c)?;
        Ok(out)
    }

    pub fn move_down(&self, c: &VeeringComplex, t: Step) -> Result<Section> {
        if !self.contains(t) {
            return Err(Error::MoveIllegal { tet: t, reason: "tetrahedron is above the section".into() });
        }
        if let Some(p) = c.succs(t).into_iter().find(|&p| self.contains(p)) {
            return Err(Error::MoveIllegal { tet: t, reason: format!("top face is covered by tetrahedron {p}") });
        }
        let out = self.remove(t);
        out.check(c)?;
        Ok(out)
    }

    /// Tetrahedra whose two bottom faces lie on the section.
    pub fn up_moves(&self, c: &VeeringComplex) -> Vec<Step> {
        let gap = c.max_pred_gap();
        let mut out: BTreeSet<Step> = BTreeSet::new();
        for s in (self.floor..self.floor + gap + 1).chain(self.above.iter().flat_map(|&s| c.succs(s))) {
            if self.can_move_up(c, s) {
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    /// Tetrahedra whose two top faces lie on the section.
    pub fn down_moves(&self, c: &VeeringComplex) -> Vec<Step> {
        self.candidates(c).filter(|&s| self.can_move_down(c, s)).collect()
    }
}

/// The `k`-th sweep layer, bounded by the window cap in periods.
pub fn base_section(c: &VeeringComplex, k: Step) -> Result<Section> {
    let cap = super::window::window_cap();
    if k.abs() > cap * c.period() {
        return Err(Error::WindowExceeded(cap));
    }
    Ok(Section::base(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::veering::{fixtures, MonodromySpec};

    fn rrl() -> VeeringComplex {
        VeeringComplex::build(&MonodromySpec::word("RRL")).unwrap()
    }

    #[test]
    fn base_layers_are_sections() {
        let c = rrl();
        for k in -7..7 {
            Section::base(k).check(&c).unwrap();
            assert_eq!(Section::base(k).up_moves(&c), vec![k]);
            assert_eq!(Section::base(k).move_up(&c, k).unwrap(), Section::base(k + 1));
            assert!(Section::base(k).is_phi_section(&c));
        }
    }

    #[test]
    fn base_zero_is_the_initial_triangulation() {
        let c = rrl();
        let t = Section::base(0).boundary(&c).unwrap();
        let slopes: BTreeSet<String> = t.edges().iter().map(|&e| c.vector(e).unwrap().slope().unwrap().to_string()).collect();
        assert_eq!(slopes, ["0/1", "1/0", "1/1"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn illegal_moves() {
        let c = rrl();
        let t = Section::base(0);
        assert!(matches!(t.move_up(&c, 1), Err(Error::MoveIllegal { tet: 1, .. })));
        assert!(matches!(t.move_down(&c, 0), Err(Error::MoveIllegal { tet: 0, .. })));
        assert_eq!(t.move_up(&c, 0).unwrap().move_down(&c, 0).unwrap(), t);
    }

    #[test]
    fn two_components_give_incomparable_sections() {
        let c = VeeringComplex::build(&fixtures::swap_spec().unwrap()).unwrap();
        let t = Section::base(0);
        let ups = t.up_moves(&c);
        assert_eq!(ups.len(), 2, "{ups:?}");
        let a = t.move_up(&c, ups[0]).unwrap();
        let b = t.move_up(&c, ups[1]).unwrap();
        assert!(!a.leq(&b) && !b.leq(&a));
        assert_eq!(a.join(&b), t.insert(ups[0]).insert(ups[1]));
        assert_eq!(a.meet(&b), t);
        a.join(&b).check(&c).unwrap();
    }
}
