//! Verdict reports and their two renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub summary: Vec<String>,
    pub verdicts: Vec<Verdict>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            summary: Vec::new(),
            verdicts: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn summary(&mut self, line: impl Into<String>) -> &mut Self {
        self.summary.push(line.into());
        self
    }

    pub fn push(&mut self, check: impl Into<String>, status: Status, witness: impl Into<String>) -> &mut Self {
        self.verdicts.push(Verdict {
            check: check.into(),
            status,
            witness: witness.into(),
        });
        if status == Status::Fail {
            self.exit_code = 1;
        }
        self
    }

    /// Summary lines, then one aligned line per verdict.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for line in &self.summary {
            out.push_str(line);
            out.push('\n');
        }
        let width = self
            .verdicts
            .iter()
            .map(|v| v.check.chars().count())
            .max()
            .unwrap_or(0);
        for v in &self.verdicts {
            let pad = width - v.check.chars().count();
            let line = format!("{}  {}{}  {}", v.status.label(), v.check, " ".repeat(pad), v.witness);
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }
}

/// JSON shape used for errors that end a command with exit code 2.
pub fn error_json(message: &str) -> String {
    let value = serde_json::json!({ "error": message, "exit_code": 2 });
    let mut text = serde_json::to_string_pretty(&value).expect("error reports serialize");
    text.push('\n');
    text
}
