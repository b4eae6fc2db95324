//! Machine-readable and text reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            input: input.into(),
            results: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn extend_checks(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.input);
        for (k, v) in &self.results {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "  {k}: {shown}");
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.pass).count();
            let _ = writeln!(out, "checks: {passed}/{} passed", self.checks.len());
            for c in &self.checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(out, "  {mark} {}", c.name);
                } else {
                    let _ = writeln!(out, "  {mark} {} ({})", c.name, c.detail);
                }
            }
        }
        out
    }
}
