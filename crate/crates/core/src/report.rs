//! Serializable verification records: one `ReportRecord` per `(n, q)` pair,
//! carrying the predicted and independently computed invariants side by
//! side, the per-check outcomes, and flags for checks whose predictions are
//! conjectural rather than theorem-backed.
//!
//! Records serialize to single-line JSON with camelCase keys. Fields that
//! may be unavailable are always present (`null` when absent) so that equal
//! records produce byte-identical lines. Graph metrics that can be
//! undefined use sentinels: `"ACYCLIC"` for girth, `"INFINITE"` for
//! diameter, `"LOWER_BOUND(w)"` and `"BUDGET_EXCEEDED"` for distances.

use serde::{Deserialize, Serialize};

use crate::distance::{DistanceMethod, DistanceResult, DistanceValue};
use crate::unit_graph::{Diameter, Girth};

/// A numeric metric or a sentinel string for the undefined cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MetricValue {
    Number(u64),
    Sentinel(String),
}

impl MetricValue {
    pub fn lower_bound(w: u64) -> MetricValue {
        MetricValue::Sentinel(format!("LOWER_BOUND({w})"))
    }

    pub fn budget_exceeded() -> MetricValue {
        MetricValue::Sentinel("BUDGET_EXCEEDED".to_string())
    }

    pub fn as_number(&self) -> Option<u64> {
        match self {
            MetricValue::Number(v) => Some(*v),
            MetricValue::Sentinel(_) => None,
        }
    }
}

impl std::fmt::Display for MetricValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MetricValue::Number(v) => write!(f, "{v}"),
            MetricValue::Sentinel(s) => write!(f, "{s}"),
        }
    }
}

impl From<Girth> for MetricValue {
    fn from(g: Girth) -> MetricValue {
        match g {
            Girth::Finite(v) => MetricValue::Number(v as u64),
            Girth::Acyclic => MetricValue::Sentinel("ACYCLIC".to_string()),
        }
    }
}

impl From<Diameter> for MetricValue {
    fn from(d: Diameter) -> MetricValue {
        match d {
            Diameter::Finite(v) => MetricValue::Number(v as u64),
            Diameter::Infinite => MetricValue::Sentinel("INFINITE".to_string()),
        }
    }
}

impl From<&DistanceResult> for MetricValue {
    fn from(r: &DistanceResult) -> MetricValue {
        match r.value {
            DistanceValue::Value(v) => MetricValue::Number(v),
            DistanceValue::LowerBound(w) => MetricValue::lower_bound(w),
            DistanceValue::BudgetExceeded => MetricValue::budget_exceeded(),
        }
    }
}

pub fn method_name(m: DistanceMethod) -> &'static str {
    match m {
        DistanceMethod::Exhaustive => "EXHAUSTIVE",
        DistanceMethod::ColumnDependency => "COLUMN_DEPENDENCY",
        DistanceMethod::WitnessOnly => "WITNESS_ONLY",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CodePredicted {
    pub length: u64,
    pub dim: u64,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DualPredicted {
    pub dim: u64,
    /// None when the dual code is trivial and has no minimum distance.
    pub d: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PredictedBlock {
    pub edges: u64,
    pub lambda: Option<u64>,
    pub diam_bound: Option<u64>,
    pub girth: Option<u64>,
    /// None when no construction rule applies to this `(n, q)` pair.
    pub code: Option<CodePredicted>,
    pub dual: Option<DualPredicted>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CodeComputed {
    pub length: u64,
    pub dim: u64,
    /// Exact value, `LOWER_BOUND(w)`, or `BUDGET_EXCEEDED`; None when no
    /// distance computation ran at all.
    pub d: Option<MetricValue>,
    pub d_method: Option<String>,
    /// Weight of an explicit codeword when the exact distance is unknown.
    pub d_upper_bound: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DualComputed {
    pub dim: u64,
    /// None when the dual code is trivial.
    pub d: Option<MetricValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComputedBlock {
    pub edges: u64,
    pub min_degree: u64,
    pub connected: bool,
    pub diameter: Option<MetricValue>,
    pub girth: Option<MetricValue>,
    pub lambda: Option<u64>,
    pub bipartite: bool,
    pub code: CodeComputed,
    pub dual: DualComputed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    /// "computed X, predicted Y" for pass/fail, the reason for skips.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportRecord {
    pub n: u64,
    pub q: u64,
    pub shape: String,
    pub predicted: PredictedBlock,
    pub computed: ComputedBlock,
    pub checks: Vec<CheckReport>,
    /// Names of checks whose prediction is conjectural for this `(n, q)`.
    pub conjecture_flags: Vec<String>,
    /// Wall-clock time; null in multi-record sweeps so output is
    /// byte-deterministic regardless of scheduling.
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    pub fn failed_checks(&self) -> Vec<&CheckReport> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    pub fn from_json_line(line: &str) -> Result<ReportRecord, serde_json::Error> {
        serde_json::from_str(line)
    }
}
