//! Verdicts and check reports returned by the membership oracles and the
//! inequality sweeps.

use serde::{Deserialize, Serialize};

/// Outcome of a membership decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    In,
    Out,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::In => "in",
            Status::Out => "out",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Numeric evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// A named scalar (a margin, a product of singular values, ...).
    Quantity { name: String, value: f64 },
    /// `log r` along one ray of dual labels, with the fitted per-step factor.
    RatioTrace {
        ray: Vec<u32>,
        log_ratios: Vec<f64>,
        growth_factor: f64,
    },
    /// Supremum of a log-scale objective over a sample grid.
    GridSup {
        label: String,
        log_sup: f64,
        argmax: Vec<f64>,
        samples: usize,
    },
}

/// A membership verdict.
///
/// `margin` is signed in log units: positive inside, negative outside, and
/// `|margin|` is the distance to the closest active constraint.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub margin: f64,
    pub reason: Option<String>,
    pub witness: Option<String>,
    pub evidence: Vec<Evidence>,
}

impl Verdict {
    pub fn new(status: Status, margin: f64) -> Self {
        Self {
            status,
            margin,
            reason: None,
            witness: None,
            evidence: Vec::new(),
        }
    }

    /// `In` when `margin >= -tol`, `Out` otherwise.
    pub fn from_margin(margin: f64, tol: f64) -> Self {
        let status = if margin >= -tol { Status::In } else { Status::Out };
        Self::new(status, margin)
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn with_evidence(mut self, e: Evidence) -> Self {
        self.evidence.push(e);
        self
    }

    pub fn quantity(self, name: impl Into<String>, value: f64) -> Self {
        self.with_evidence(Evidence::Quantity {
            name: name.into(),
            value,
        })
    }
}

/// One failed instance of a checked inequality `lhs <= rhs`, in log scale.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub case: String,
    pub log_lhs: f64,
    pub log_rhs: f64,
    /// `log_rhs - log_lhs`, negative for a violation.
    pub slack: f64,
}

/// Result of sweeping an inequality over a finite window.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub passed: bool,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self {
            passed: true,
            ..Self::default()
        }
    }

    /// Records one comparison `log_lhs <= log_rhs + tol * max(1, |log_rhs|)`.
    pub fn check(&mut self, case: impl FnOnce() -> String, log_lhs: f64, log_rhs: f64, tol: f64) {
        self.checked += 1;
        let slack = log_rhs - log_lhs;
        if slack < -tol * log_rhs.abs().max(1.0) || slack.is_nan() {
            self.passed = false;
            self.violations.push(Violation {
                case: case(),
                log_lhs,
                log_rhs,
                slack,
            });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.passed &= other.passed;
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}
