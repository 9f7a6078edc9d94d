//! Verification reports.

use std::fmt::Write as _;

use dendexp_core::Ring;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A documented false statement that indeed fails. Counts as success.
    ExpectedFail,
}

impl Status {
    pub fn ok(self) -> bool {
        self != Status::Fail
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "XFAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub status: Status,
    /// Lowest degree at which the two sides differ.
    pub failing_degree: Option<usize>,
    /// Smallest differing term of `lhs - rhs` at that degree.
    pub counterexample: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub ring: Ring,
    pub seed: u64,
    pub identities: Vec<IdentityResult>,
    pub duration_ms: u64,
    pub status: Status,
}

impl VerifyReport {
    pub fn new(
        suite: &str,
        max_degree: usize,
        ring: Ring,
        seed: u64,
        identities: Vec<IdentityResult>,
        duration_ms: u64,
    ) -> VerifyReport {
        let status = if identities.iter().all(|i| i.status.ok()) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerifyReport {
            suite: suite.to_string(),
            max_degree,
            ring,
            seed,
            identities,
            duration_ms,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<VerifyReport> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} (N={}, ring {}, seed {})",
            self.suite, self.max_degree, self.ring, self.seed
        );
        for id in &self.identities {
            let _ = write!(out, "  {:<5} {}", id.status.label(), id.name);
            if !id.detail.is_empty() {
                let _ = write!(out, ": {}", id.detail);
            }
            if let Some(d) = id.failing_degree {
                let _ = write!(out, " [differs at degree {d}");
                if let Some(c) = &id.counterexample {
                    let _ = write!(out, ", term {c}");
                }
                out.push(']');
            }
            out.push('\n');
        }
        let failed = self.identities.iter().filter(|i| !i.status.ok()).count();
        let _ = writeln!(
            out,
            "{}: {} identities, {} failed, {:.2} s",
            if self.passed() { "pass" } else { "FAIL" },
            self.identities.len(),
            failed,
            self.duration_ms as f64 / 1000.0
        );
        out
    }
}
