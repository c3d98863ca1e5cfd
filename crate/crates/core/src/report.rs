//! Structured results of inequality instance checks.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Only an upper bound is available; nothing is asserted.
    BoundOnly,
    /// Recorded but not asserted.
    Recorded,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// Name of the statement being checked.
    pub anchor: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub slack: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

impl CheckRecord {
    pub fn new(check_id: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            anchor: anchor.into(),
            inputs: BTreeMap::new(),
            lhs: None,
            rhs: None,
            slack: String::new(),
            status: CheckStatus::Recorded,
        }
    }

    pub fn input(mut self, k: &str, v: impl ToString) -> Self {
        self.inputs.insert(k.to_string(), v.to_string());
        self
    }

    pub fn slack(mut self, s: impl Into<String>) -> Self {
        self.slack = s.into();
        self
    }

    /// Records `lhs ≤ rhs`.
    pub fn leq(mut self, lhs: i64, rhs: i64) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.status = if lhs <= rhs { CheckStatus::Pass } else { CheckStatus::Fail };
        self
    }

    /// Records `lhs = rhs`.
    pub fn eq(mut self, lhs: i64, rhs: i64) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.status = if lhs == rhs { CheckStatus::Pass } else { CheckStatus::Fail };
        self
    }

    pub fn holds(mut self, ok: bool) -> Self {
        self.status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self
    }

    pub fn values(mut self, lhs: i64, rhs: i64) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn status(mut self, s: CheckStatus) -> Self {
        self.status = s;
        self
    }

    pub fn skipped(self, reason: impl Into<String>) -> Self {
        self.status(CheckStatus::Skipped(reason.into()))
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Sorts by check id; ties keep their order.
pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
}
