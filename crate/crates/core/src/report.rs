//! Machine-readable check results and suite reports. Serialized bytes are
//! deterministic for a fixed seed: wall time is kept in memory but never
//! written, and checks are sorted by name before aggregation.

use std::time::Duration;

#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    /// Present iff pass is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passing(check: impl Into<String>, value: Option<String>) -> Self {
        CheckResult {
            check: check.into(),
            pass: true,
            witness: None,
            value,
            elapsed: Duration::ZERO,
        }
    }

    pub fn failing(check: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckResult {
            check: check.into(),
            pass: false,
            witness: Some(witness.into()),
            value: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn from_outcome(
        check: impl Into<String>,
        pass: bool,
        witness: impl Into<String>,
    ) -> Self {
        if pass {
            CheckResult::passing(check, None)
        } else {
            CheckResult::failing(check, witness)
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn add(&mut self, result: CheckResult) {
        self.checks.push(result);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn witnesses(&self) -> Vec<String> {
        let mut sorted: Vec<&CheckResult> = self.checks.iter().filter(|c| !c.pass).collect();
        sorted.sort_by(|a, b| a.check.cmp(&b.check));
        sorted
            .iter()
            .map(|c| format!("{}: {}", c.check, c.witness.as_deref().unwrap_or("(no witness)")))
            .collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(serde::Serialize)]
        struct Summary<'a> {
            suite: &'a str,
            passed: usize,
            failed: usize,
            witnesses: Vec<String>,
            checks: Vec<&'a CheckResult>,
        }
        let mut checks: Vec<&CheckResult> = self.checks.iter().collect();
        checks.sort_by(|a, b| a.check.cmp(&b.check));
        serde_json::to_string_pretty(&Summary {
            suite: &self.suite,
            passed: self.passed(),
            failed: self.failed(),
            witnesses: self.witnesses(),
            checks,
        })
        .expect("serializable")
    }
}
