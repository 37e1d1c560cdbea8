//! Structured verification reports: `{lemma, parameters, status, checks, witness}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: None }
    }

    pub fn with_detail(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub lemma: String,
    pub parameters: Value,
    pub status: Status,
    pub checks: Vec<Check>,
    /// First failing item, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Summary figures such as tuple counts or minima.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub summary: Value,
}

impl Report {
    pub fn new(lemma: impl Into<String>, parameters: Value) -> Self {
        Report {
            lemma: lemma.into(),
            parameters,
            status: Status::Pass,
            checks: Vec::new(),
            witness: None,
            summary: Value::Null,
        }
    }

    pub fn push(&mut self, check: Check) {
        if !check.passed {
            self.status = Status::Fail;
            if self.witness.is_none() {
                self.witness = Some(match &check.detail {
                    Some(d) => format!("{}: {d}", check.name),
                    None => check.name.clone(),
                });
            }
        }
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}
