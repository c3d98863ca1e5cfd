//! Exact distances on the Farey graph and in annular covers, and the
//! intersection-number bound calculators.

pub mod annular;
pub mod bounds;
pub mod constants;
pub mod farey;

pub use annular::{annular_diameter, annular_distance, annular_gap, annular_position, AnnularFrame};
pub use bounds::{bowditch_bound, chi_intersection_bound, diam_as, BoundKind, DistanceBound};
pub use constants::{Constants, CONSTANTS, D};
pub use farey::farey_distance;
