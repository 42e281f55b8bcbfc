use serde::Serialize;

/// Outcome of checking one identity on one instance. Failures carry a
/// witness that reproduces them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub instance: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(id: impl Into<String>, instance: impl Into<String>) -> VerificationReport {
        VerificationReport { id: id.into(), instance: instance.into(), pass: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, instance: impl Into<String>, witness: impl Into<String>) -> VerificationReport {
        VerificationReport { id: id.into(), instance: instance.into(), pass: false, witness: Some(witness.into()) }
    }

    /// Pass when `mismatch` is `None`.
    pub fn check(id: impl Into<String>, instance: impl Into<String>, mismatch: Option<String>) -> VerificationReport {
        match mismatch {
            None => VerificationReport::pass(id, instance),
            Some(w) => VerificationReport::fail(id, instance, w),
        }
    }
}

/// Witness for two values that should agree.
pub fn differ<T: std::fmt::Display + PartialEq>(lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("lhs = {lhs}; rhs = {rhs}"))
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
