//! Red/blue colorings of τ-edge orbits.
//!
//! In every tetrahedron the four sides of the equatorial square alternate
//! colors. The chirality is fixed so that the sides `a, c` of the flip
//! quadrilateral are blue and `b, d` are red; on the square torus this
//! makes red edges exactly those of positive slope in the frame whose
//! horizontal axis is `λ⁻` and vertical axis is `λ⁺`.

use super::complex::VeeringComplex;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Color::Red { "red" } else { "blue" })
    }
}

/// Finds the coloring of edge orbits, or the first tetrahedron orbit at
/// which alternation or chirality fails.
pub fn color_complex(c: &VeeringComplex) -> Result<Vec<Color>> {
    let m = c.period() as usize;
    // node m stands for "blue"; parity 0 means same color as blue
    let mut uf = ParityUnionFind::new(m + 1);
    for (r, t) in c.tet_orbits().iter().enumerate() {
        let [a, b, cc, d] = t.sides.map(|e| c.orbit(e));
        for (x, want) in [(a, 0), (cc, 0), (b, 1), (d, 1)] {
            if !uf.relate(x, m, want) {
                return Err(Error::Unveerable {
                    tet: r as i64,
                    reason: format!("side orbit {x} is forced to both colors"),
                });
            }
        }
    }
    let mut out = Vec::with_capacity(m);
    for r in 0..m {
        match uf.parity(r, m) {
            Some(0) => out.push(Color::Blue),
            Some(_) => out.push(Color::Red),
            None => {
                return Err(Error::Unveerable {
                    tet: r as i64,
                    reason: format!("edge orbit {r} is never a side of a tetrahedron"),
                })
            }
        }
    }
    Ok(out)
}

/// Recomputes the coloring of a built complex.
pub fn validate_veering(c: &VeeringComplex) -> Result<Vec<Color>> {
    color_complex(c)
}

struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![0; n] }
    }

    /// Root and parity to the root.
    fn root(&mut self, x: usize) -> (usize, u8) {
        let mut p = 0;
        let mut cur = x;
        while self.parent[cur] != cur {
            p ^= self.parity[cur];
            cur = self.parent[cur];
        }
        (cur, p)
    }

    fn relate(&mut self, x: usize, y: usize, want: u8) -> bool {
        let (rx, px) = self.root(x);
        let (ry, py) = self.root(y);
        if rx == ry {
            return px ^ py == want;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ want;
        true
    }

    fn parity(&mut self, x: usize, y: usize) -> Option<u8> {
        let (rx, px) = self.root(x);
        let (ry, py) = self.root(y);
        (rx == ry).then_some(px ^ py)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::QuadNum;
    use crate::veering::monodromy::MonodromySpec;

    fn words(max: usize) -> Vec<String> {
        let mut out = Vec::new();
        for n in 2..=max {
            for bits in 0..(1u32 << n) {
                let w: String = (0..n).map(|i| if bits >> i & 1 == 1 { 'L' } else { 'R' }).collect();
                if w.contains('L') && w.contains('R') {
                    out.push(w);
                }
            }
        }
        out
    }

    fn det(a: &[QuadNum; 2], b: &[QuadNum; 2]) -> QuadNum {
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0]))
    }

    /// Red iff the edge has positive slope in the frame with `λ⁻`
    /// horizontal and `λ⁺` vertical.
    fn oracle(c: &VeeringComplex, s: i64) -> Color {
        let [lm, lp] = c.laminations(0).unwrap();
        let v = c.vector(s).unwrap();
        let x = [QuadNum::integer(v.x), QuadNum::integer(v.y)];
        let sign = det(&x, &lp).signum() * det(&lm, &x).signum() * det(&lm, &lp).signum();
        if sign > 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    #[test]
    fn torus_colors_match_the_slope_sign_oracle() {
        for w in words(6) {
            let c = VeeringComplex::build(&MonodromySpec::word(&w)).unwrap();
            for s in -2 * c.period()..2 * c.period() {
                assert_eq!(c.color(s).unwrap(), oracle(&c, s), "word {w}, edge {s}");
            }
        }
    }
}
