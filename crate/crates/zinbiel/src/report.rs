//! Command reports and their JSON form.
//!
//! Exit codes: 0 every check passed, 1 a check failed, 2 the input could not be
//! read or parsed, 3 a result contradicts a proven statement.

use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
    /// Failure means a proven statement is contradicted.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub theorem: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub exit_code: i32,
    pub checks: Vec<Check>,
    pub output: String,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ok: true, exit_code: EXIT_OK, checks: Vec::new(), output: String::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Check {
        self.push(name, passed, detail, false)
    }

    /// A check whose failure contradicts a proven statement.
    pub fn theorem(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Check {
        self.push(name, passed, detail, true)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>, theorem: bool) -> &mut Check {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into(), witness: None, theorem });
        self.refresh();
        self.checks.last_mut().expect("just pushed")
    }

    pub fn output_line(&mut self, line: impl AsRef<str>) {
        self.output.push_str(line.as_ref());
        self.output.push('\n');
    }

    /// Replaces the report with a parse or input failure.
    pub fn parse_failure(command: impl Into<String>, message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.check("input", false, message);
        r.exit_code = EXIT_PARSE;
        r
    }

    fn refresh(&mut self) {
        if self.exit_code == EXIT_PARSE {
            return;
        }
        self.ok = self.checks.iter().all(|c| c.passed);
        self.exit_code = if self.checks.iter().any(|c| !c.passed && c.theorem) {
            EXIT_CONTRADICTION
        } else if !self.ok {
            EXIT_CHECK_FAILED
        } else {
            EXIT_OK
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = match (c.passed, c.theorem) {
                (true, _) => "PASS",
                (false, false) => "FAIL",
                (false, true) => "ALARM",
            };
            out.push_str(&format!("{mark} {}", c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(": {}", c.detail));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        if self.exit_code == EXIT_CONTRADICTION {
            out.push_str("ALARM: a result contradicts a proven statement\n");
        }
        out.push_str(&self.output);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_precedence() {
        let mut r = Report::new("x");
        assert_eq!(r.exit_code, EXIT_OK);
        r.check("a", false, "");
        assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
        r.theorem("b", false, "");
        assert_eq!(r.exit_code, EXIT_CONTRADICTION);
        assert!(!r.ok);
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("check");
        r.check("c", false, "d").witness = Some("w".into());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
