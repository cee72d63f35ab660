//! Command output: one structured document rendered as JSON or text.

use std::fmt;

use lpdo::{ConditionReport, LpdoError, Lpdo, ParseError};
use serde_json::{json, Map, Value};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Precondition = 3,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { what: String, err: ParseError },
    Check(LpdoError),
    Precondition(LpdoError),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => Exit::Usage,
            CliError::Check(_) => Exit::CheckFailed,
            CliError::Precondition(_) => Exit::Precondition,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Check(_) => "check_failed",
            CliError::Precondition(_) => "precondition",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Parse { what, err } => write!(f, "cannot parse {what}: {err}"),
            CliError::Check(e) | CliError::Precondition(e) => write!(f, "{e}"),
        }
    }
}

impl From<LpdoError> for CliError {
    fn from(e: LpdoError) -> Self {
        match e {
            LpdoError::NotLeftFactor(_)
            | LpdoError::NotRightFactor(_)
            | LpdoError::Inconsistent(_) => CliError::Check(e),
            LpdoError::UnknownFactType(_) | LpdoError::UnknownGroup(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Precondition(e),
        }
    }
}

pub struct Report {
    command: &'static str,
    input: Value,
    normalized: Option<String>,
    result: Map<String, Value>,
    residuals: Option<Value>,
    verdict: Option<String>,
    text: Vec<String>,
    pub exit: Exit,
}

impl Report {
    pub fn new(command: &'static str, input: impl Into<Value>) -> Self {
        Report {
            command,
            input: input.into(),
            normalized: None,
            result: Map::new(),
            residuals: None,
            verdict: None,
            text: Vec::new(),
            exit: Exit::Ok,
        }
    }

    pub fn operator(&mut self, l: &Lpdo) {
        self.normalized = Some(l.to_string());
    }

    /// Adds a result field; `human` is its text rendering.
    pub fn field(&mut self, key: &str, value: impl Into<Value>, human: impl fmt::Display) {
        self.result.insert(key.into(), value.into());
        self.text.push(format!("{key}: {human}"));
    }

    /// A text-only line that restates content already present in a field.
    pub fn note(&mut self, line: impl Into<String>) {
        self.text.push(line.into());
    }

    pub fn verdict(&mut self, v: impl Into<String>, ok: bool) {
        let v = v.into();
        self.text.push(format!("verdict: {v}"));
        self.verdict = Some(v);
        if !ok {
            self.exit = Exit::CheckFailed;
        }
    }

    pub fn residuals(&mut self, reports: &[ConditionReport]) {
        let arr: Vec<Value> = reports.iter().map(condition_json).collect();
        for r in reports {
            self.text.push(format!("  {} {}", mark(r.holds), r.label));
            for (k, res) in r.residuals.iter().enumerate() {
                if !res.is_zero() {
                    self.text.push(format!("      residual {}: {res}", k + 1));
                }
            }
        }
        self.residuals = Some(Value::Array(arr));
    }

    pub fn to_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("command".into(), self.command.into());
        doc.insert("input".into(), self.input.clone());
        doc.insert(
            "normalized_operator".into(),
            self.normalized.clone().map_or(Value::Null, Value::String),
        );
        doc.insert("result".into(), Value::Object(self.result.clone()));
        if let Some(r) = &self.residuals {
            doc.insert("residuals".into(), r.clone());
        }
        if let Some(v) = &self.verdict {
            doc.insert("verdict".into(), v.clone().into());
        }
        serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.normalized {
            out.push_str(&format!("operator: {n}\n"));
        }
        for line in &self.text {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

pub fn error_json(command: &str, input: &Value, err: &CliError) -> String {
    let doc = json!({
        "command": command,
        "input": input,
        "error": { "kind": err.kind(), "message": err.to_string() },
    });
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn condition_json(r: &ConditionReport) -> Value {
    json!({
        "type": r.label,
        "holds": r.holds,
        "residuals": r.residuals.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    })
}

pub fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        let check: CliError = LpdoError::NotRightFactor("Dx".into()).into();
        let pre: CliError = LpdoError::NotFormOne.into();
        let usage: CliError = LpdoError::UnknownGroup("VII".into()).into();
        assert_eq!(check.exit(), Exit::CheckFailed);
        assert_eq!(pre.exit(), Exit::Precondition);
        assert_eq!(usage.exit(), Exit::Usage);
    }

    #[test]
    fn failed_verdict_sets_exit() {
        let mut r = Report::new("types", "Dx");
        r.field("holding", Vec::<String>::new(), "[]");
        assert_eq!(r.exit, Exit::Ok);
        r.verdict("(S)(XY) fails", false);
        assert_eq!(r.exit, Exit::CheckFailed);
        assert_eq!(r.to_text(), "holding: []\nverdict: (S)(XY) fails\n");
        let doc: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(doc["verdict"], "(S)(XY) fails");
        assert!(doc["normalized_operator"].is_null());
    }
}
