//! Machine-readable command reports.
//!
//! Everything except `metadata` is a pure function of the command line, so
//! two runs with the same flags differ only in that field.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub measured: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Check {
    pub fn pass(name: &str, measured: Value) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            measured,
            counterexample: None,
            reason: None,
        }
    }

    pub fn fail(name: &str, measured: Value, counterexample: Value) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            measured,
            counterexample: Some(counterexample),
            reason: None,
        }
    }

    pub fn skipped(name: &str, reason: &str) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            measured: Value::Null,
            counterexample: None,
            reason: Some(reason.into()),
        }
    }

    /// Pass when `ok`, otherwise fail with `counterexample`.
    pub fn decide(name: &str, ok: bool, measured: Value, counterexample: Value) -> Self {
        if ok {
            Check::pass(name, measured)
        } else {
            Check::fail(name, measured, counterexample)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub wall_time_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub args: Value,
    pub checks: Vec<Check>,
    pub all_passed: bool,
    pub metadata: Metadata,
}

impl Report {
    pub fn new(command: &str, args: Value, checks: Vec<Check>, elapsed: Duration) -> Self {
        let all_passed = checks.iter().all(|c| c.status != Status::Fail);
        Report {
            command: command.into(),
            args,
            checks,
            all_passed,
            metadata: Metadata {
                wall_time_ms: elapsed.as_millis(),
            },
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed {
            crate::error::EXIT_OK
        } else {
            crate::error::EXIT_FAILURE
        }
    }
}
