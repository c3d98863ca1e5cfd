//! Exact distance in the Farey graph.

use crate::error::Result;
use crate::fiber::slope::{complement, Mat2, Slope, Vec2};
use std::collections::VecDeque;

/// Graph distance between two slopes, where slopes are adjacent when
/// `|ps − qr| = 1`.
///
/// The first slope is moved to `1/0`; geodesics from `1/0` to `x` stay in
/// the ladder of Farey triangles crossed by the vertical line over `x`,
/// whose vertices are `1/0` and the Stern–Brocot ancestors of `x`.
pub fn farey_distance(s1: Slope, s2: Slope) -> Result<u64> {
    if s1 == s2 {
        return Ok(0);
    }
    let v1 = s1.vector();
    let w = complement(v1)?;
    // columns (−w, v1) have determinant det(−w, v1) = det(v1, w) = 1
    let b = Mat2([[-w.x, v1.x], [-w.y, v1.y]]);
    let v = b.inverse_unimodular()?.apply(s2.vector())?;
    let x = v.slope()?;
    if x.q() == 0 {
        return Ok(0);
    }
    if x.q() == 1 {
        return Ok(1);
    }
    let mut ladder = vec![Vec2::new(0, 1)];
    let (p, q) = (x.p(), x.q());
    let fl = p.div_euclid(q);
    let (mut lo, mut hi) = (Vec2::new(1, fl), Vec2::new(1, fl + 1));
    ladder.push(lo);
    ladder.push(hi);
    loop {
        let m = lo.add(hi)?;
        ladder.push(m);
        // compare m = m.y/m.x with p/q
        let c = (m.y * q).cmp(&(p * m.x));
        match c {
            std::cmp::Ordering::Equal => break,
            std::cmp::Ordering::Less => lo = m,
            std::cmp::Ordering::Greater => hi = m,
        }
    }
    let target = ladder.len() - 1;
    let mut dist = vec![u64::MAX; ladder.len()];
    dist[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if i == target {
            return Ok(dist[i]);
        }
        for j in 0..ladder.len() {
            if dist[j] == u64::MAX && ladder[i].det(ladder[j])?.abs() == 1 {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    unreachable!("the Farey ladder is connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    fn brute(h: i128) -> (Vec<Slope>, HashMap<Slope, usize>) {
        let mut all = Vec::new();
        for p in -h..=h {
            for q in 0..=h {
                if let Ok(x) = Slope::new(p, q) {
                    if !all.contains(&x) {
                        all.push(x);
                    }
                }
            }
        }
        let index = all.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        (all, index)
    }

    fn bfs(all: &[Slope], from: usize) -> Vec<u64> {
        let mut dist = vec![u64::MAX; all.len()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            for j in 0..all.len() {
                if dist[j] == u64::MAX && all[i].cross(&all[j]).unwrap() == 1 {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    #[test]
    fn small_examples() {
        assert_eq!(farey_distance(s("0/1"), s("1/0")).unwrap(), 1);
        assert_eq!(farey_distance(s("0/1"), s("0/1")).unwrap(), 0);
        assert_eq!(farey_distance(s("0/1"), s("5/2")).unwrap(), 3);
    }

    #[test]
    fn agrees_with_bounded_height_bfs() {
        let (all, index) = brute(16);
        for a in ["0/1", "1/0", "2/3", "-3/5", "7/2"] {
            let from = index[&s(a)];
            let dist = bfs(&all, from);
            for (j, &b) in all.iter().enumerate() {
                if b.p().abs() <= 6 && b.q() <= 6 {
                    assert_eq!(farey_distance(s(a), b).unwrap(), dist[j], "{a} to {b}");
                }
            }
        }
    }
}
