//! Output documents: a metadata header plus a table of
//! `(type, rank, j, count, method)` rows, rendered as CSV, JSON or Markdown.

use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::ValueEnum;
use nilideal_core::verify::{CheckOutcome, Row};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub methods: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowOut {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub j: usize,
    pub count: u64,
    pub method: String,
    /// End height, for path rows only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
}

impl RowOut {
    pub fn from_row(r: &Row) -> RowOut {
        RowOut {
            kind: r.spec.letter().to_string(),
            rank: r.spec.rank(),
            j: r.j,
            count: num_traits::ToPrimitive::to_u64(&r.count).expect("counts fit in 64 bits"),
            method: r.method.to_string(),
            h: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOut {
    pub name: String,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl From<&CheckOutcome> for CheckOut {
    fn from(c: &CheckOutcome) -> Self {
        CheckOut {
            name: c.name.to_string(),
            kind: c.system.map(|s| s.letter().to_string()),
            rank: c.system.map(|s| s.rank()),
            j: c.j,
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
            passed: c.passed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub schema_version: &'static str,
    pub meta: Meta,
    pub rows: Vec<RowOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOut>,
    /// Named scalar facts for the inspection commands.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<(String, String)>,
}

impl Document {
    pub fn new(command: &'static str, spec: Option<String>, with_timestamp: bool) -> Document {
        let generated_at = with_timestamp.then(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        });
        Document {
            schema_version: SCHEMA_VERSION,
            meta: Meta {
                tool: "nilideal",
                version: env!("CARGO_PKG_VERSION"),
                command,
                spec,
                methods: Vec::new(),
                status: Status::NotApplicable,
                generated_at,
            },
            rows: Vec::new(),
            checks: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.push((key.to_string(), value.to_string()));
    }

    pub fn set_checks(&mut self, checks: &[CheckOutcome]) {
        self.checks = checks.iter().map(CheckOut::from).collect();
        self.meta.status = if checks.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Md => self.to_markdown(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        // details as an object, in insertion order
        if let Some(obj) = v.as_object_mut() {
            if !self.details.is_empty() {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .details
                    .iter()
                    .map(|(k, val)| (k.clone(), serde_json::Value::String(val.clone())))
                    .collect();
                obj.insert("details".into(), serde_json::Value::Object(map));
            }
        }
        v
    }

    fn has_heights(&self) -> bool {
        self.rows.iter().any(|r| r.h.is_some())
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        if !self.rows.is_empty() || self.details.is_empty() {
            let heights = self.has_heights();
            out.push_str("type,rank,j,count,method");
            out.push_str(if heights { ",h\r\n" } else { "\r\n" });
            for r in &self.rows {
                let _ = write!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(&r.kind),
                    r.rank,
                    r.j,
                    r.count,
                    csv_field(&r.method)
                );
                if heights {
                    let _ = write!(out, ",{}", r.h.map(|h| h.to_string()).unwrap_or_default());
                }
                out.push_str("\r\n");
            }
        } else {
            out.push_str("key,value\r\n");
            for (k, v) in &self.details {
                let _ = write!(out, "{},{}\r\n", csv_field(k), csv_field(v));
            }
        }
        out
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        let m = &self.meta;
        let _ = writeln!(out, "# nilideal {}", m.command);
        out.push('\n');
        let _ = writeln!(out, "- version: {}", m.version);
        if let Some(spec) = &m.spec {
            let _ = writeln!(out, "- system: {spec}");
        }
        if !m.methods.is_empty() {
            let _ = writeln!(out, "- methods: {}", m.methods.join(", "));
        }
        let status = match m.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        };
        let _ = writeln!(out, "- status: {status}");
        if let Some(t) = m.generated_at {
            let _ = writeln!(out, "- generated_at: {t}");
        }

        if !self.details.is_empty() {
            out.push_str("\n| key | value |\n|---|---|\n");
            for (k, v) in &self.details {
                let _ = writeln!(out, "| {k} | {} |", v.replace('|', "\\|"));
            }
        }
        if !self.rows.is_empty() {
            let heights = self.has_heights();
            out.push_str(if heights {
                "\n| type | rank | h | j | count | method |\n|---|---|---|---|---|---|\n"
            } else {
                "\n| type | rank | j | count | method |\n|---|---|---|---|---|\n"
            });
            for r in &self.rows {
                match r.h {
                    Some(h) if heights => {
                        let _ = writeln!(
                            out,
                            "| {} | {} | {h} | {} | {} | {} |",
                            r.kind, r.rank, r.j, r.count, r.method
                        );
                    }
                    _ => {
                        let _ = writeln!(
                            out,
                            "| {} | {} | {} | {} | {} |",
                            r.kind, r.rank, r.j, r.count, r.method
                        );
                    }
                }
            }
        }
        if !self.checks.is_empty() {
            out.push_str("\n| check | passed | failed |\n|---|---|---|\n");
            let mut names: Vec<&str> = Vec::new();
            for c in &self.checks {
                if !names.contains(&c.name.as_str()) {
                    names.push(&c.name);
                }
            }
            for name in names {
                let (ok, bad) =
                    self.checks
                        .iter()
                        .filter(|c| c.name == name)
                        .fold((0, 0), |(ok, bad), c| {
                            if c.passed {
                                (ok + 1, bad)
                            } else {
                                (ok, bad + 1)
                            }
                        });
                let _ = writeln!(out, "| {name} | {ok} | {bad} |");
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn timestamp_only_when_requested() {
        let d = Document::new("table", None, false);
        assert!(!d.render(Format::Json).contains("generated_at"));
        let d = Document::new("table", None, true);
        assert!(d.render(Format::Json).contains("generated_at"));
    }
}
