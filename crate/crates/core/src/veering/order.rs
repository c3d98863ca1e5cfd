//! The slope order on crossing τ-edges and the deck transformation.

use super::complex::{TauEdgeRef, VeeringComplex};
use crate::error::{Error, Result};
use crate::fiber::triangulation::EdgeId;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeOrder {
    Less,
    Greater,
    Incomparable,
    /// The same edge; incomparable by convention.
    Equal,
}

/// `f < e` iff `f` dies weakly below the tetrahedron creating `e`.
pub fn edge_order_ids(c: &VeeringComplex, e: EdgeId, f: EdgeId) -> Result<EdgeOrder> {
    if e == f {
        return Ok(EdgeOrder::Equal);
    }
    if !c.crosses(e, f)? {
        return Ok(EdgeOrder::Incomparable);
    }
    let e_first = c.tet_le(c.edge_death(e), f);
    let f_first = c.tet_le(c.edge_death(f), e);
    match (e_first, f_first) {
        (true, false) => Ok(EdgeOrder::Less),
        (false, true) => Ok(EdgeOrder::Greater),
        _ => Err(Error::Inconsistent(format!("crossing edges {e} and {f} have overlapping lifetimes"))),
    }
}

pub fn edge_order(c: &VeeringComplex, e: TauEdgeRef, f: TauEdgeRef) -> Result<EdgeOrder> {
    edge_order_ids(c, c.edge_id(e)?, c.edge_id(f)?)
}

/// `Φ^k`: the deck transformation moves level `ℓ` to `ℓ − k`.
pub fn apply_deck(e: TauEdgeRef, k: i64) -> TauEdgeRef {
    TauEdgeRef { orbit: e.orbit, level: e.level - k }
}

pub fn apply_deck_id(c: &VeeringComplex, e: EdgeId, k: i64) -> EdgeId {
    e - k * c.period()
}
