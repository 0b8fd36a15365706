//! Machine-readable run reports. Exact quantities travel as decimal
//! strings so arbitrary precision survives serialization; key order is the
//! struct declaration order, so serializing is deterministic and
//! reparse/reserialize is byte-identical.

use serde::{Deserialize, Serialize};

/// Outcome of a single check on a single graph.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Reason the check did not apply (precondition unmet). Skipped checks
    /// count as passing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Exact coefficient strings, leading term first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall-clock milliseconds, only when timings were requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_owned(),
            pass: true,
            skipped: None,
            left: None,
            right: None,
            residual: None,
            value: None,
            bound: None,
            equality: None,
            equality_expected: None,
            detail: None,
            millis: None,
        }
    }

    pub fn skipped(name: &str, reason: String) -> Self {
        let mut r = CheckResult::new(name);
        r.skipped = Some(reason);
        r
    }
}

/// The graph a report is about.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputDescriptor {
    pub kind: String,
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
}

/// Full report for one invocation or one batch item.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub version: String,
    pub input: InputDescriptor,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(input: InputDescriptor, checks: Vec<CheckResult>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            input,
            checks,
            pass,
        }
    }
}
