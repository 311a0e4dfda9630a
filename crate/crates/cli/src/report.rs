//! Run reports in text and JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    pub name: String,
    pub paper_ref: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DiagnosticRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    pub check: String,
    pub message: String,
}

/// A computed object, rendered in the definition language where possible.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Output {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub checks: Vec<CheckRecord>,
    pub diagnostics: Vec<DiagnosticRecord>,
    pub outputs: Vec<Output>,
    pub error: Option<ErrorRecord>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: Vec::new(),
            checks: Vec::new(),
            diagnostics: Vec::new(),
            outputs: Vec::new(),
            error: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.push((key.to_string(), value.into()));
        self
    }

    pub fn check(&mut self, name: &str, paper_ref: &str, pass: bool, witnesses: Vec<String>) -> &mut Self {
        self.checks.push(CheckRecord { entry: None, name: name.into(), paper_ref: paper_ref.into(), pass, witnesses });
        self
    }

    pub fn output(&mut self, name: &str, value: impl Into<String>) -> &mut Self {
        self.outputs.push(Output { name: name.into(), value: value.into() });
        self
    }

    pub fn set_error(&mut self, e: &CliError) {
        let loc = e.location();
        self.error = Some(ErrorRecord {
            kind: e.kind().into(),
            message: e.to_string(),
            line: loc.map(|l| l.0),
            column: loc.map(|l| l.1),
        });
    }

    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }

    /// 0 when every check passes, 1 when a check fails, 2 on an error.
    pub fn exit_code(&self) -> i32 {
        match (&self.error, self.pass()) {
            (Some(_), _) => 2,
            (None, true) => 0,
            (None, false) => 1,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&JsonReport::from(self)).expect("serializable report");
                s.push('\n');
                s
            }
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "{} ({})", self.command, inputs.join(", "));
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error [{}]: {}", e.kind, e.message);
            return s;
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            match &c.entry {
                Some(e) => {
                    let _ = writeln!(s, "{tag} {e} {}: {}", c.name, c.paper_ref);
                }
                None => {
                    let _ = writeln!(s, "{tag} {}: {}", c.name, c.paper_ref);
                }
            }
            for w in &c.witnesses {
                let _ = writeln!(s, "    {w}");
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(s, "DIAGNOSTIC {} {}: {}", d.entry.as_deref().unwrap_or("-"), d.check, d.message);
        }
        for o in &self.outputs {
            let _ = writeln!(s, "{}:", o.name);
            for line in o.value.lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(s, "{} ({passed}/{} checks passed)", if self.pass() { "pass" } else { "fail" }, self.checks.len());
        s
    }
}

/// The wire form: `inputs` as an object.
#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    command: &'a str,
    inputs: serde_json::Map<String, serde_json::Value>,
    checks: &'a [CheckRecord],
    diagnostics: &'a [DiagnosticRecord],
    #[serde(skip_serializing_if = "<[Output]>::is_empty")]
    outputs: &'a [Output],
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a ErrorRecord>,
    pass: bool,
}

impl<'a> From<&'a Report> for JsonReport<'a> {
    fn from(r: &'a Report) -> Self {
        Self {
            schema_version: r.schema_version,
            command: &r.command,
            inputs: r.inputs.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect(),
            checks: &r.checks,
            diagnostics: &r.diagnostics,
            outputs: &r.outputs,
            error: r.error.as_ref(),
            pass: r.pass(),
        }
    }
}
