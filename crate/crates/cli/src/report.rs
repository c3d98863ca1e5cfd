//! Verification reports.

use serde::{Deserialize, Serialize};
use std::time::{SystemTime, UNIX_EPOCH};
use veerlat::report::{CheckRecord, CheckStatus};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub bound_only: usize,
    pub recorded: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Summary {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                CheckStatus::Pass => s.pass += 1,
                CheckStatus::Fail => s.fail += 1,
                CheckStatus::BoundOnly => s.bound_only += 1,
                CheckStatus::Recorded => s.recorded += 1,
                CheckStatus::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub tool_version: String,
    pub seed: u64,
    pub bundle_hash: String,
    pub suites: Vec<String>,
    /// Seconds since the Unix epoch; a timestamp field.
    pub generated_at: u64,
    /// A timestamp field.
    pub wall_clock_ms: u64,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new(seed: u64, bundle_hash: &str, suites: Vec<String>, records: Vec<CheckRecord>, wall_clock_ms: u64) -> Self {
        let generated_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        CheckReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            bundle_hash: bundle_hash.to_string(),
            suites,
            generated_at,
            wall_clock_ms,
            summary: Summary::of(&records),
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// The report with its timestamp fields zeroed.
    pub fn without_timestamps(&self) -> CheckReport {
        CheckReport { generated_at: 0, wall_clock_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
