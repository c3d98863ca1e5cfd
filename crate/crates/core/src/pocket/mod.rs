//! τ-compatible subsurfaces, projections, pockets and instance checks.

pub mod checks;
pub mod pockets;
pub mod projection;
pub mod subsurface;

pub use checks::{theorem_checks, CheckOptions};
pub use pockets::{
    first_translate_overlap, isolated_pocket, maximal_pocket, overlap_index, pinched_pocket, pocket_region,
    region_triangles, retract_both, retract_to_pocket, retract_with, select_t0, IsolatedPocket, IsolationOptions,
    Pocket, PocketKind, Subsurface,
};
pub use projection::{d_y, d_y_point, lambda_distance, lambda_projection, proj_section, proj_tau, Projection};
pub use subsurface::{find_pivot, pivot_annuli, pivot_slopes, tau_boundary, AnnulusData, SubsurfaceSpec};
