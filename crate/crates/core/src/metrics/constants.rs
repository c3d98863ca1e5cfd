//! Universal constants of the projection bounds.

use serde::Serialize;

/// Diameter bound for projections of τ-edge graphs.
pub const D: i64 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub d: i64,
    pub annular_proj_diam: i64,
    pub proj_close: i64,
    pub top_bottom_slack: i64,
    pub stays_close: i64,
    pub right_place: i64,
    pub pocket_cut: i64,
    pub progress_step: i64,
    pub dichotomy_factor: i64,
    pub immersion_m: i64,
}

pub const CONSTANTS: Constants = Constants {
    d: D,
    annular_proj_diam: 3,
    proj_close: 7,
    top_bottom_slack: D + 1,
    stays_close: 4 * D,
    right_place: 2 * D + 11,
    pocket_cut: 16 * D,
    progress_step: 2 * D,
    dichotomy_factor: 9 * D,
    immersion_m: 38,
};

impl Constants {
    /// Checks the derived constants against their defining formulas.
    pub fn self_check(&self) -> bool {
        let d = self.d;
        d == 15
            && self.annular_proj_diam == 3
            && self.proj_close == 7
            && self.top_bottom_slack == d + 1
            && self.stays_close == 4 * d
            && self.right_place == 2 * d + 11
            && self.pocket_cut == 16 * d
            && self.progress_step == 2 * d
            && self.dichotomy_factor == 9 * d
            && self.immersion_m == 38
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_consistent() {
        assert!(CONSTANTS.self_check());
        assert_eq!(CONSTANTS.pocket_cut, 240);
        assert_eq!(CONSTANTS.right_place, 41);
    }
}
