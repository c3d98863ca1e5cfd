//! Sections of the cover, their lattice and the families `T(E)`.

pub mod family;
pub mod ideal;
pub mod sample;
pub mod window;

pub use family::{bottom_of, check_disjoint, contains_all, extend_to_section, monotone_path, top_of};
pub use ideal::{base_section, Section};
pub use sample::{random_disjoint_edges, random_section};
pub use window::{stabilize, window_cap, DEFAULT_WINDOW_CAP};
