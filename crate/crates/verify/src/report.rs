//! Verification reports and their serializations.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub suites: Vec<SuiteReport>,
}

impl Default for Report {
    fn default() -> Self {
        Report { version: env!("CARGO_PKG_VERSION").to_string(), suites: Vec::new() }
    }
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    /// Process exit status: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Copy with every timing field zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for s in &mut r.suites {
            for c in &mut s.checks {
                c.ms = 0;
            }
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# Verification report (v{})\n", self.version);
        for s in &self.suites {
            let _ = write!(out, "\n## {} {}\n\n", s.name, params_line(&s.params));
            out.push_str("| check | status | ms | witness |\n|---|---|---|---|\n");
            for c in &s.checks {
                let w = c.witness.as_deref().unwrap_or("").replace('|', "\\|");
                let status = if c.passed() { "pass" } else { "**FAIL**" };
                let _ = writeln!(out, "| {} | {status} | {} | {w} |", c.id, c.ms);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let _ = writeln!(out, "{} {}", s.name, params_line(&s.params));
            for c in &s.checks {
                let tag = if c.passed() { "PASS" } else { "FAIL" };
                let _ = write!(out, "  {tag} {} ({} ms)", c.id, c.ms);
                if let Some(w) = &c.witness {
                    let _ = write!(out, ": {w}");
                }
                out.push('\n');
            }
            let failed = s.failures().count();
            let _ = writeln!(out, "  {} checks, {failed} failed", s.checks.len());
        }
        out
    }
}

fn params_line(p: &BTreeMap<String, Value>) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("[{}]", parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::default();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suites"], Value::Array(vec![]));
        assert!(v["version"].is_string());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn passing_check_has_no_witness() {
        let c = CheckRecord { id: "a".into(), status: Status::Pass, witness: None, ms: 3 };
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"id":"a","status":"pass","ms":3}"#);
    }

    #[test]
    fn failing_check_sets_exit_code() {
        let c = CheckRecord { id: "a".into(), status: Status::Fail, witness: Some("x".into()), ms: 0 };
        let r = Report {
            suites: vec![SuiteReport { name: "s".into(), params: BTreeMap::new(), checks: vec![c] }],
            ..Report::default()
        };
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_text().contains("FAIL a"));
        assert!(r.to_markdown().contains("**FAIL**"));
    }
}
