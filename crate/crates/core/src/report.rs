//! Check results and reports.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Only used where the available invariants cannot decide.
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// What a check computed: a status and the facts behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Value,
}

impl Outcome {
    pub fn new(ok: bool, witness: Value) -> Self {
        Outcome {
            status: Status::from_bool(ok),
            witness,
        }
    }

    pub fn inconclusive(witness: Value) -> Self {
        Outcome {
            status: Status::Inconclusive,
            witness,
        }
    }

    pub fn error(message: impl fmt::Display) -> Self {
        Outcome {
            status: Status::Fail,
            witness: serde_json::json!({ "error": message.to_string() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check_id: String,
    /// The mathematical statement the check certifies.
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub trials: usize,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.status == Status::Fail).count()
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// The report with all timings zeroed, for comparing runs.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for e in &mut r.entries {
            e.timing_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{:<13} {:<28} {:>8} ms  {}\n",
                e.status, e.check_id, e.timing_ms, e.paper_ref
            ));
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} inconclusive (seed {}, trials {})\n",
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive),
            self.seed,
            self.trials
        ));
        out
    }
}
