use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::derived::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub name: String,
    pub sha256: String,
}

impl Input {
    pub fn new(name: &str, text: &str) -> Input {
        Input { name: name.to_string(), sha256: format!("{:x}", Sha256::digest(text.as_bytes())) }
    }
}

/// One named claim with the tag of the statement it checks.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub cutoff: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub settings: Settings,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub tables: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str, settings: Settings) -> Report {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            settings,
            passed: true,
            checks: Vec::new(),
            tables: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, name: &str, text: &str) {
        self.inputs.push(Input::new(name, text));
    }

    pub fn check(&mut self, name: impl Into<String>, anchor: impl Into<String>, verdict: Verdict) {
        self.passed &= verdict.passed();
        self.checks.push(Check { name: name.into(), anchor: anchor.into(), verdict });
    }

    pub fn check_bool(&mut self, name: impl Into<String>, anchor: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.check(name, anchor, Verdict::from_bool(ok, witness));
    }

    pub fn table(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report tables serialize");
        self.tables.insert(key.into(), v);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.verdict.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} ({})", self.command, if self.passed { "pass" } else { "FAIL" });
        for i in &self.inputs {
            let _ = writeln!(s, "  input {} sha256:{}", i.name, &i.sha256[..16]);
        }
        let _ = writeln!(s, "  cutoff {} seed {}", self.settings.cutoff, self.settings.seed);
        for c in &self.checks {
            let (tag, note) = match &c.verdict {
                Verdict::Pass => ("pass", String::new()),
                Verdict::Fail { witness } => ("FAIL", format!(": {witness}")),
                Verdict::Inconclusive { reason } => ("????", format!(": {reason}")),
            };
            let _ = writeln!(s, "{tag}  {:<34} {}{note}", c.anchor, c.name);
        }
        for (k, v) in &self.tables {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }
}
