//! Hand-built flip scripts beyond the once-punctured torus.

use super::monodromy::{FlipScript, MonodromySpec};
use crate::error::Result;
use crate::fiber::slope::Vec2;
use crate::fiber::triangulation::{FlatData, IdealTriangulation};

/// Two square tori exchanged by the monodromy; one period performs `RL`
/// on the first torus and then swaps the components, so the square of the
/// monodromy is `RL` on each torus.
pub fn swap_script() -> Result<FlipScript> {
    let mut vectors = std::collections::BTreeMap::new();
    let mut signs = std::collections::BTreeMap::new();
    let base = [Vec2::new(1, 0), Vec2::new(0, 1), Vec2::new(1, 1)];
    for k in 0..2i64 {
        for (i, v) in base.iter().enumerate() {
            vectors.insert(3 * k + i as i64, *v);
        }
        signs.insert(2 * k, [1, 1, -1]);
        signs.insert(2 * k + 1, [1, -1, -1]);
    }
    let initial = IdealTriangulation::new([(0, [0, 1, 2]), (1, [2, 0, 1]), (2, [3, 4, 5]), (3, [5, 3, 4])])?
        .with_flat(FlatData { vectors, signs })?;
    // R flips v = 1 creating 6, then L flips u = 0 creating 7; (u, v, s) = (6, 2, 7)
    let relabel = [(6, 3), (2, 4), (7, 5), (3, 0), (4, 1), (5, 2)].into();
    Ok(FlipScript { initial, flips: vec![1, 0], relabel })
}

pub fn swap_spec() -> Result<MonodromySpec> {
    Ok(MonodromySpec::Script(swap_script()?))
}

/// A periodic torus script that backtracks: it flips the diagonal it has
/// just created, so the second quadrilateral forces one edge to both colors.
pub fn unveerable_script() -> FlipScript {
    let initial = IdealTriangulation::square_torus();
    let relabel = [(4, 0), (5, 1), (6, 2)].into();
    FlipScript { initial, flips: vec![2, 3, 0, 1], relabel }
}
