//! Integer vectors and reduced slopes on the square torus.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A lattice vector `(x, y)`. A slope `p/q` has direction `(q, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: i128,
    pub y: i128,
}

impl Vec2 {
    pub const fn new(x: i128, y: i128) -> Self {
        Vec2 { x, y }
    }

    pub fn det(self, o: Vec2) -> Result<i128> {
        let a = self.x.checked_mul(o.y).ok_or(Error::Overflow("det"))?;
        let b = self.y.checked_mul(o.x).ok_or(Error::Overflow("det"))?;
        a.checked_sub(b).ok_or(Error::Overflow("det"))
    }

    pub fn add(self, o: Vec2) -> Result<Vec2> {
        Ok(Vec2 {
            x: self.x.checked_add(o.x).ok_or(Error::Overflow("add"))?,
            y: self.y.checked_add(o.y).ok_or(Error::Overflow("add"))?,
        })
    }

    pub fn neg(self) -> Vec2 {
        Vec2 { x: -self.x, y: -self.y }
    }

    pub fn scale(self, k: i128) -> Result<Vec2> {
        Ok(Vec2 {
            x: self.x.checked_mul(k).ok_or(Error::Overflow("scale"))?,
            y: self.y.checked_mul(k).ok_or(Error::Overflow("scale"))?,
        })
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_primitive(self) -> bool {
        self.x.gcd(&self.y) == 1
    }

    pub fn slope(self) -> Result<Slope> {
        Slope::new(self.y, self.x)
    }
}

/// A 2×2 integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2(pub [[i128; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);
    /// `R` keeps the first basis vector and adds it to the second.
    pub const R: Mat2 = Mat2([[1, 1], [0, 1]]);
    /// `L` keeps the second basis vector and adds it to the first.
    pub const L: Mat2 = Mat2([[1, 0], [1, 1]]);

    pub fn det(&self) -> Result<i128> {
        let [[a, b], [c, d]] = self.0;
        let ad = a.checked_mul(d).ok_or(Error::Overflow("matrix det"))?;
        let bc = b.checked_mul(c).ok_or(Error::Overflow("matrix det"))?;
        ad.checked_sub(bc).ok_or(Error::Overflow("matrix det"))
    }

    pub fn trace(&self) -> i128 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn mul(&self, o: &Mat2) -> Result<Mat2> {
        let mut out = [[0i128; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let a = self.0[i][0].checked_mul(o.0[0][j]).ok_or(Error::Overflow("matrix mul"))?;
                let b = self.0[i][1].checked_mul(o.0[1][j]).ok_or(Error::Overflow("matrix mul"))?;
                *cell = a.checked_add(b).ok_or(Error::Overflow("matrix mul"))?;
            }
        }
        Ok(Mat2(out))
    }

    pub fn apply(&self, v: Vec2) -> Result<Vec2> {
        let [[a, b], [c, d]] = self.0;
        let m = |p: i128, q: i128| p.checked_mul(q).ok_or(Error::Overflow("matrix apply"));
        Ok(Vec2 {
            x: m(a, v.x)?.checked_add(m(b, v.y)?).ok_or(Error::Overflow("matrix apply"))?,
            y: m(c, v.x)?.checked_add(m(d, v.y)?).ok_or(Error::Overflow("matrix apply"))?,
        })
    }

    /// Inverse of a determinant ±1 matrix.
    pub fn inverse_unimodular(&self) -> Result<Mat2> {
        let det = self.det()?;
        if det.abs() != 1 {
            return Err(Error::Invalid(format!("matrix determinant {det} is not ±1")));
        }
        let [[a, b], [c, d]] = self.0;
        Ok(Mat2([[d * det, -b * det], [-c * det, a * det]]))
    }

    pub fn neg(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        Mat2([[-a, -b], [-c, -d]])
    }
}

/// A reduced slope `p/q` with `q ≥ 0`; infinity is `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slope {
    p: i128,
    q: i128,
}

impl Slope {
    pub fn new(p: i128, q: i128) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::Invalid("slope 0/0".into()));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    pub fn p(&self) -> i128 {
        self.p
    }

    pub fn q(&self) -> i128 {
        self.q
    }

    pub fn vector(&self) -> Vec2 {
        Vec2::new(self.q, self.p)
    }

    /// `|ps − qr|`, the number of times the closed curves cross.
    pub fn cross(&self, o: &Slope) -> Result<u128> {
        Ok(self.vector().det(o.vector())?.unsigned_abs())
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl std::str::FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let bad = || Error::Invalid(format!("cannot parse slope {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

/// Some `d` with `det(c, d) = 1`, for a primitive `c`.
pub fn complement(c: Vec2) -> Result<Vec2> {
    let e = c.x.extended_gcd(&c.y);
    if e.gcd.abs() != 1 {
        return Err(Error::Invalid(format!("vector ({}, {}) is not primitive", c.x, c.y)));
    }
    // x·cx + y·cy = g, so det(c, (−y, x)) = g.
    let d = Vec2::new(-e.y * e.gcd, e.x * e.gcd);
    debug_assert_eq!(c.det(d).ok(), Some(1));
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slopes_reduce() {
        assert_eq!(Slope::new(-4, -2).unwrap(), Slope::new(2, 1).unwrap());
        assert_eq!(Slope::new(-3, 0).unwrap(), Slope::INFINITY);
        assert!(Slope::new(0, 0).is_err());
        assert_eq!("-1/1".parse::<Slope>().unwrap(), Slope::new(1, -1).unwrap());
    }

    #[test]
    fn complement_has_unit_determinant() {
        for (x, y) in [(1, 0), (0, 1), (3, 5), (-7, 2), (13, -8)] {
            let c = Vec2::new(x, y);
            assert_eq!(c.det(complement(c).unwrap()).unwrap(), 1);
        }
    }

    #[test]
    fn lr_matrices() {
        assert_eq!(Mat2::R.mul(&Mat2::L).unwrap(), Mat2([[2, 1], [1, 1]]));
        let m = Mat2([[7, 6], [1, 1]]);
        assert_eq!(m.mul(&m.inverse_unimodular().unwrap()).unwrap(), Mat2::IDENTITY);
    }
}
