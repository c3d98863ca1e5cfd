//! Punctured fiber surfaces: ideal triangulations, flips, arc classes and
//! proper graphs.

pub mod arc;
pub mod graph;
pub mod slope;
pub mod triangulation;

pub use arc::{intersection_number, intersection_number_on, ArcClass, ArcKind};
pub use graph::{chi_prime, nearly_simple_arcs, Carrier, GraphEdge, ProperGraph, VertexKind};
pub use slope::{Mat2, Slope, Vec2};
pub use triangulation::{EdgeId, FlatData, FlipRecord, IdealTriangulation, Quad, TriangleId};
