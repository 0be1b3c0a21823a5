//! Verification reports shared by the checks and the command line.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::shapes::Composition;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub n: usize,
    pub q: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Composition>,
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(flatten)]
    pub details: BTreeMap<String, Value>,
    /// Wall-clock milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl CheckReport {
    pub fn new(check: &str, n: usize, q: u32, mu: Option<&Composition>) -> Self {
        CheckReport {
            n,
            q,
            mu: mu.cloned(),
            check: check.to_string(),
            pass: true,
            counterexample: None,
            details: BTreeMap::new(),
            timings: BTreeMap::new(),
        }
    }

    /// Marks the report failed; only the first counterexample is kept.
    pub fn fail(&mut self, counterexample: impl Into<Value>) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(counterexample.into());
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn time(&mut self, stage: &str, since: Instant) {
        self.timings.insert(stage.to_string(), since.elapsed().as_secs_f64() * 1000.0);
    }

    /// Merges a sub-check: a failure there fails this report.
    pub fn absorb(&mut self, other: CheckReport) {
        if !other.pass {
            let cx =
                serde_json::json!({ "check": other.check, "mu": other.mu, "counterexample": other.counterexample });
            self.fail(cx);
        }
        for (k, v) in other.timings {
            *self.timings.entry(k).or_default() += v;
        }
    }
}
