//! Report envelope: every asserted number is tagged with where it came from.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Claim {
    pub name: String,
    /// "computed", or "both" when a published value is attached.
    pub source: &'static str,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub command: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    pub input: Value,
    pub results: BTreeMap<String, Value>,
    pub claims: Vec<Claim>,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn new(command: &str, seed: u64, builtin: Option<String>, input: Value) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            tool: format!("matgor {}", env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            seed,
            builtin,
            input,
            results: BTreeMap::new(),
            claims: Vec::new(),
            checks: Vec::new(),
            pass: true,
            timings_ms: None,
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), serde_json::to_value(value).expect("serialisable result"));
    }

    /// Records a computed value, compared with the published one when known.
    pub fn claim(&mut self, name: &str, computed: impl Serialize, expected: Option<Value>) {
        let computed = serde_json::to_value(computed).expect("serialisable claim");
        let agree = expected.as_ref().map(|e| *e == computed);
        self.claims.push(Claim {
            name: name.to_string(),
            source: if expected.is_some() { "both" } else { "computed" },
            computed,
            paper_expected: expected,
            agree,
        });
    }

    pub fn check(&mut self, name: &str, pass: bool) {
        self.checks.push(Check { name: name.to_string(), pass });
    }

    /// Fixes `pass` from the checks and claim verdicts; returns the names that failed.
    pub fn finish(&mut self) -> Vec<String> {
        let mut failed: Vec<String> = self.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        failed.extend(self.claims.iter().filter(|c| c.agree == Some(false)).map(|c| c.name.clone()));
        self.pass = failed.is_empty();
        failed
    }
}
