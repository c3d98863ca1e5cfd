//! The layered veering triangulation of the cyclic cover.

pub mod coloring;
pub mod complex;
pub mod fixtures;
pub mod monodromy;
pub mod order;

pub use coloring::{validate_veering, Color};
pub use complex::{FlatModel, Step, TauEdgeRef, Tet, TetOrbit, VeeringComplex};
pub use monodromy::{lr_script, matrix_to_word, FlipScript, Letter, LrWord, MonodromySpec};
pub use order::{apply_deck, apply_deck_id, edge_order, edge_order_ids, EdgeOrder};
