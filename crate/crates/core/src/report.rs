//! Step-by-step verification reports.

use std::fmt;

use serde::Serialize;

/// Outcome of one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named, independently checkable claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub step: String,
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Ordered list of steps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub steps: Vec<Step>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), steps: Vec::new() }
    }

    /// Records a step that passes iff `ok`.
    pub fn check(&mut self, step: impl Into<String>, claim: impl Into<String>, ok: bool) -> bool {
        self.push(step, claim, ok, None);
        ok
    }

    /// Like [`Report::check`], with a note that is kept on failure.
    pub fn check_with(
        &mut self,
        step: impl Into<String>,
        claim: impl Into<String>,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) -> bool {
        let d = if ok { None } else { Some(detail()) };
        self.push(step, claim, ok, d);
        ok
    }

    fn push(&mut self, step: impl Into<String>, claim: impl Into<String>, ok: bool, detail: Option<String>) {
        self.steps.push(Step {
            step: step.into(),
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        });
    }

    /// Records a failure carrying an error message.
    pub fn fail(&mut self, step: impl Into<String>, claim: impl Into<String>, detail: impl Into<String>) {
        self.push(step, claim, false, Some(detail.into()));
    }

    pub fn extend(&mut self, other: Report) {
        self.steps.extend(other.steps);
    }

    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.status == Status::Pass)
    }

    pub fn passed(&self) -> usize {
        self.steps.iter().filter(|s| s.status == Status::Pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| s.status == Status::Fail)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for s in &self.steps {
            let mark = match s.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "  [{mark}] {}: {}", s.step, s.claim)?;
            if let Some(d) = &s.detail {
                writeln!(f, "         {d}")?;
            }
        }
        write!(f, "{}/{} steps passed", self.passed(), self.len())
    }
}
