//! Validation reports and the error taxonomy.
//!
//! Checks never panic on mathematical failure: an axiom violation is a
//! `Fail` record with a witness, while a malformed input (non-total
//! table, dimension mismatch) is a structural error raised before any
//! check runs. Constructions that require a verified input refuse to
//! run otherwise, carrying the failing report as the diagnostic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// How a sweep quantified over its domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum Mode {
    /// Every tuple of a finite carrier.
    Exhaustive,
    /// Every basis tuple of a finite-dimensional carrier; sufficient by
    /// multilinearity.
    Basis,
    /// Seeded random tuples of a tolerance carrier.
    Sampled { seed: u64, budget: u64 },
    /// Finite differences at the identity.
    Probe { step: f64, scheme: u8, tol: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    /// The law being checked, named by what it asserts.
    pub law: String,
    pub status: CheckStatus,
    /// Number of tuples swept.
    pub checked: u64,
    /// First failing tuple, rendered with carrier element names.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Largest residual observed (tolerance regimes only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    /// What was checked, e.g. `rb-pair on (S3, S3, id, conj)`.
    pub subject: String,
    pub mode: Mode,
    pub checks: Vec<CheckRecord>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>, mode: Mode) -> Self {
        ValidationReport {
            subject: subject.into(),
            mode,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn record_pass(&mut self, law: impl Into<String>, checked: u64) {
        self.checks.push(CheckRecord {
            law: law.into(),
            status: CheckStatus::Pass,
            checked,
            witness: None,
            residual: None,
        });
    }

    pub fn record_pass_residual(&mut self, law: impl Into<String>, checked: u64, residual: f64) {
        self.checks.push(CheckRecord {
            law: law.into(),
            status: CheckStatus::Pass,
            checked,
            witness: None,
            residual: Some(residual),
        });
    }

    pub fn record_fail(&mut self, law: impl Into<String>, checked: u64, witness: String) {
        self.checks.push(CheckRecord {
            law: law.into(),
            status: CheckStatus::Fail,
            checked,
            witness: Some(witness),
            residual: None,
        });
    }

    pub fn record_fail_residual(
        &mut self,
        law: impl Into<String>,
        checked: u64,
        witness: String,
        residual: f64,
    ) {
        self.checks.push(CheckRecord {
            law: law.into(),
            status: CheckStatus::Fail,
            checked,
            witness: Some(witness),
            residual: Some(residual),
        });
    }

    /// Appends another report's records under a prefixed law name.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.law = format!("{prefix}/{}", c.law);
            self.checks.push(c);
        }
    }

    /// First failing record, if any.
    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    /// Law names of all failing records.
    pub fn failing_laws(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.law.as_str())
            .collect()
    }
}

/// A construction result bundled with the verification of its own
/// output. Theorem-backed constructions re-check their conclusions
/// instead of trusting them.
#[derive(Debug, Clone)]
pub struct Derived<T> {
    pub value: T,
    pub report: ValidationReport,
}

impl<T> Derived<T> {
    pub fn new(value: T, report: ValidationReport) -> Self {
        Derived { value, report }
    }
}

/// Everything a run needs to be replayed: the full configuration is
/// echoed verbatim, and no timestamp is recorded, so serializing the
/// same run twice yields identical bytes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub command: String,
    pub config: ConfigEcho,
    pub reports: Vec<ValidationReport>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub budget: u64,
    pub tolerance: f64,
    pub carrier_eps: f64,
    pub fd_step: f64,
    pub fd_scheme: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inputs: Vec<String>,
}

impl RunReport {
    pub fn new(
        command: impl Into<String>,
        config: ConfigEcho,
        reports: Vec<ValidationReport>,
    ) -> Self {
        let passed = reports.iter().all(ValidationReport::passed);
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            config,
            reports,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Error)]
pub enum CheckError {
    /// Malformed input: non-total table, bad dimensions, unknown
    /// registry name. Distinct from an axiom failure.
    #[error("structural error: {0}")]
    Structural(String),
    /// A construction's precondition check failed; the report carries
    /// the witnesses.
    #[error("precondition failed for {what}: {}", summarize(report))]
    Precondition {
        what: String,
        report: Box<ValidationReport>,
    },
    /// The operation is not defined for this carrier/map combination.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn summarize(report: &ValidationReport) -> String {
    let laws = report.failing_laws();
    if laws.is_empty() {
        "no failing checks".to_string()
    } else {
        laws.join(", ")
    }
}

impl CheckError {
    pub fn precondition(what: impl Into<String>, report: ValidationReport) -> Self {
        CheckError::Precondition {
            what: what.into(),
            report: Box::new(report),
        }
    }
}
