//! Upper bounds on curve-graph distance from intersection numbers.

use crate::error::{Error, Result};
use crate::fiber::graph::ProperGraph;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub kind: BoundKind,
    pub value: u64,
    pub rule: String,
}

impl DistanceBound {
    fn upper(value: u64, rule: impl Into<String>) -> Self {
        DistanceBound { kind: BoundKind::Upper, value, rule: rule.into() }
    }
}

pub const BOWDITCH_CAP: u32 = 64;

/// `2(n + 1)` for the least `n` with `2ⁿ · i ≤ ζⁿ⁺¹`.
pub fn bowditch_bound(i: u64, zeta: u64) -> Result<DistanceBound> {
    if zeta < 3 {
        return Err(Error::Invalid(format!("zeta = {zeta} is below 3")));
    }
    let (two, z, i) = (BigUint::from(2u32), BigUint::from(zeta), BigUint::from(i));
    for n in 0..=BOWDITCH_CAP {
        if two.pow(n) * &i <= z.pow(n + 1) {
            return Ok(DistanceBound::upper(2 * (u64::from(n) + 1), format!("2^{n}·i ≤ ζ^{}", n + 1)));
        }
    }
    Err(Error::NoBoundApplicable(format!("no n ≤ {BOWDITCH_CAP} for i = {i}, ζ = {zeta}")))
}

/// Least `k` with `2·log₂(i) ≤ k`, that is `i² ≤ 2ᵏ`.
pub fn ceil_two_log2(i: u64) -> u64 {
    let sq = u128::from(i) * u128::from(i);
    let mut k = 0;
    while (1u128 << k) < sq {
        k += 1;
    }
    k
}

/// Tiered bound: 1 for disjoint classes, 15 up to `8|χ|+4`, 18 up to
/// `32|χ|+8`, and `max(18, ⌈2·log₂ i⌉ + 2)` beyond.
pub fn chi_intersection_bound(i: u64, chi: i64) -> DistanceBound {
    let c = chi.unsigned_abs();
    if i == 0 {
        DistanceBound::upper(1, "disjoint")
    } else if i <= 8 * c + 4 {
        DistanceBound::upper(15, "i ≤ 8|χ|+4")
    } else if i <= 32 * c + 8 {
        DistanceBound::upper(18, "i ≤ 32|χ|+8")
    } else {
        DistanceBound::upper((ceil_two_log2(i) + 2).max(18), "2·log₂ i + 2")
    }
}

/// Bound on the diameter of the classes carried by a proper graph.
pub fn diam_as(g: &ProperGraph) -> Result<DistanceBound> {
    if !g.is_essential() {
        return Err(Error::InessentialGraph);
    }
    let chi = g.surface_chi();
    let v = g.vertex_count() as u64;
    if v <= 2 * chi.unsigned_abs() + 1 {
        return Ok(DistanceBound::upper(15, "at most 2|χ|+1 vertices"));
    }
    let mut b = chi_intersection_bound(4 * v, chi);
    b.rule = format!("crossing estimate 4·{v}: {}", b.rule);
    Ok(b)
}
