//! Distances in the annular cover of the torus about a core slope.
//!
//! Fix `d` with `det(c, d) = 1`. A straight line of direction `x` crossing
//! the core `c` has a canonical lift whose position along the core is
//! `det(x, d) / det(c, x)`. Two lifts at positions `s, t` cross
//! `⌈|s − t|⌉` times, so their annular distance is `1 + ⌈|s − t|⌉`; equal
//! lifts are at distance 1, the diameter of a single point in this
//! convention.

use crate::error::{Error, Result};
use crate::fiber::arc::ArcClass;
use crate::fiber::slope::{complement, Slope, Vec2};
use crate::quadratic::QuadNum;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnularFrame {
    core: Vec2,
    d: Vec2,
}

impl AnnularFrame {
    pub fn new(core: Vec2) -> Result<Self> {
        Ok(AnnularFrame { core, d: complement(core)? })
    }

    pub fn core(&self) -> Vec2 {
        self.core
    }

    /// Position of a lattice direction; `None` if it does not cross the core.
    pub fn position(&self, x: Vec2) -> Result<Option<QuadNum>> {
        let den = self.core.det(x)?;
        if den == 0 {
            return Ok(None);
        }
        Ok(Some(QuadNum::rational(x.det(self.d)?, den)))
    }

    /// Position of a direction with quadratic-irrational coordinates.
    pub fn position_quad(&self, x: &[QuadNum; 2]) -> Option<QuadNum> {
        let det = |ax: &QuadNum, ay: &QuadNum, b: Vec2| {
            ax.mul(&QuadNum::integer(b.y)).sub(&ay.mul(&QuadNum::integer(b.x)))
        };
        // det(c, x) = −det(x, c)
        let den = det(&x[0], &x[1], self.core).neg();
        if den.signum() == 0 {
            return None;
        }
        Some(det(&x[0], &x[1], self.d).div(&den))
    }
}

pub fn annular_position(core: Slope, x: Slope) -> Result<Option<QuadNum>> {
    AnnularFrame::new(core.vector())?.position(x.vector())
}

/// `1 + ⌈|a − b|⌉`, or 1 when the positions agree.
pub fn annular_gap(a: &QuadNum, b: &QuadNum) -> u64 {
    let diff = a.sub(b).abs();
    if diff.signum() == 0 {
        return 1;
    }
    1 + diff.ceil().to_u64().expect("annular gap fits in u64")
}

/// Diameter of a finite set of positions; 0 for the empty set.
pub fn annular_diameter<'a>(positions: impl IntoIterator<Item = &'a QuadNum>) -> u64 {
    let mut lo: Option<&QuadNum> = None;
    let mut hi: Option<&QuadNum> = None;
    for p in positions {
        if lo.map_or(true, |l| p < l) {
            lo = Some(p);
        }
        if hi.map_or(true, |h| p > h) {
            hi = Some(p);
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => annular_gap(l, h),
        _ => 0,
    }
}

/// Annular distance between two straight classes about `core`.
pub fn annular_distance(core: Slope, a: &ArcClass, b: &ArcClass) -> Result<u64> {
    let frame = AnnularFrame::new(core.vector())?;
    let pos = |c: &ArcClass, name: &str| -> Result<QuadNum> {
        let ArcClass::Slope { slope, .. } = c else {
            return Err(Error::ModelUnsupported("annular distance needs slope classes".into()));
        };
        frame.position(slope.vector())?.ok_or_else(|| Error::EmptyProjection(format!("{name} ({slope})")))
    };
    Ok(annular_gap(&pos(a, "first class")?, &pos(b, "second class")?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn distances_about_infinity() {
        let core = s("1/0");
        let a = ArcClass::arc(s("0/1"));
        assert_eq!(annular_distance(core, &a, &ArcClass::arc(s("1/1"))).unwrap(), 2);
        for k in 2..=6 {
            assert_eq!(annular_distance(core, &a, &ArcClass::arc(Slope::new(k, 1).unwrap())).unwrap(), k as u64 + 1);
        }
        assert_eq!(annular_distance(core, &a, &a).unwrap(), 1);
        assert!(matches!(annular_distance(core, &a, &ArcClass::arc(core)), Err(Error::EmptyProjection(_))));
    }

    #[test]
    fn dehn_twists_shift_by_one() {
        // T(x) = x + det(c, x) c moves the position by exactly det(c, d) = 1
        for core in ["1/0", "2/3", "-5/7"] {
            let c = s(core).vector();
            for a in ["0/1", "1/1", "4/9"] {
                let x = s(a).vector();
                if c.det(x).unwrap() == 0 {
                    continue;
                }
                let mut y = x;
                for k in 1..=8 {
                    y = y.add(c.scale(c.det(x).unwrap()).unwrap()).unwrap();
                    let d = annular_distance(s(core), &ArcClass::arc(x.slope().unwrap()), &ArcClass::arc(y.slope().unwrap())).unwrap();
                    assert_eq!(d, k + 1, "core {core}, a {a}, k {k}");
                }
            }
        }
    }
}
