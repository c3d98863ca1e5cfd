//! Section calculus for layered veering triangulations of fibered
//! 3-manifolds: sections as order ideals of tetrahedra, edge orders,
//! subsurface projections and pockets, with exact arithmetic on the
//! once-punctured torus.

pub mod error;
pub mod fiber;
pub mod metrics;
pub mod pocket;
pub mod quadratic;
pub mod report;
pub mod section;
pub mod veering;

pub use error::{Error, Result};
