//! Machine-readable identity reports.
//!
//! Every verification routine produces an [`IdentityReport`] tagged with the
//! equation label it certifies, so a failing run names the exact identity
//! that broke and the first counterexample found.

use serde::Serialize;

/// Outcome of one identity sweep. `status` is "pass" iff no counterexample
/// was found.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FirstFailure>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstFailure {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    pub fn pass(identity_id: impl Into<String>, range: impl Into<String>) -> Self {
        IdentityReport {
            identity_id: identity_id.into(),
            range: range.into(),
            status: Status::Pass,
            first_failure: None,
        }
    }

    pub fn fail(
        identity_id: impl Into<String>,
        range: impl Into<String>,
        parameters: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        IdentityReport {
            identity_id: identity_id.into(),
            range: range.into(),
            status: Status::Fail,
            first_failure: Some(FirstFailure {
                parameters: parameters.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One human-readable line, as printed by the suite runner.
    pub fn line(&self) -> String {
        match &self.first_failure {
            None => format!("PASS  {:<28} {}", self.identity_id, self.range),
            Some(f) => format!(
                "FAIL  {:<28} {} [at {}: lhs={} rhs={}]",
                self.identity_id, self.range, f.parameters, f.lhs, f.rhs
            ),
        }
    }
}
