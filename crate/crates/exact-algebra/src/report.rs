use std::fmt;

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// Short tag naming the identity being exercised.
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { id: id.into(), anchor: anchor.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", if self.passed { "pass" } else { "FAIL" }, self.id, self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
