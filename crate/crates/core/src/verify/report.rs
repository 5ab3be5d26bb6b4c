use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(input: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Failure { input: input.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of one suite. Wall time is reported in text only so the JSON form
/// is byte-identical across runs.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Free-form deterministic notes, e.g. recovered exponents.
    pub notes: Vec<String>,
    elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, instances: usize, failures: Vec<Failure>) -> Self {
        SuiteReport { suite: suite.to_string(), instances, failures, notes: Vec::new(), elapsed: Duration::ZERO }
    }

    /// Collect per-instance outcomes in generation order.
    pub fn from_outcomes(suite: &str, outcomes: Vec<Option<Failure>>) -> Self {
        let instances = outcomes.len();
        Self::new(suite, instances, outcomes.into_iter().flatten().collect())
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    pub(crate) fn set_elapsed(&mut self, d: Duration) {
        self.elapsed = d;
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "input": f.input, "expected": f.expected, "actual": f.actual,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} instances, {} failures, {:.2}s)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for fail in self.failures.iter().take(20) {
            writeln!(f, "  {}\n    expected: {}\n    actual:   {}", fail.input, fail.expected, fail.actual)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}
