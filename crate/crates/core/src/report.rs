//! Report documents shared by the command-line front end and the acceptance suite.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "ginwb";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One command's results. Everything but `timings` is stable for fixed inputs and version.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// SHA-256 of the canonical input description.
    pub inputs_digest: String,
    pub inputs: Value,
    pub sections: BTreeMap<String, Value>,
    pub discrepancies: Vec<String>,
    /// Wall-clock seconds per section; excluded from comparisons.
    pub timings: BTreeMap<String, f64>,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Value) -> Self {
        let canonical = serde_json::to_string(&inputs).expect("serializable");
        let digest = Sha256::digest(canonical.as_bytes());
        let inputs_digest = digest.iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });
        ReportDocument {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            command: command.to_string(),
            inputs_digest,
            inputs,
            sections: BTreeMap::new(),
            discrepancies: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn section(&mut self, name: &str, value: impl Serialize) {
        self.sections.insert(name.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn timing(&mut self, name: &str, seconds: f64) {
        self.timings.insert(name.to_string(), seconds);
    }

    pub fn discrepancy(&mut self, msg: impl Into<String>) {
        self.discrepancies.push(msg.into());
    }

    pub fn has_discrepancies(&self) -> bool {
        !self.discrepancies.is_empty()
    }

    /// The document without timings.
    pub fn comparable(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Some(o) = v.as_object_mut() {
            o.remove("timings");
        }
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{} {} {}\ninputs {}\n", self.tool, self.version, self.command, self.inputs_digest);
        for (name, v) in &self.sections {
            let _ = writeln!(s, "\n== {name} ==");
            let _ = writeln!(s, "{}", render_value(v, 0));
        }
        if !self.discrepancies.is_empty() {
            let _ = writeln!(s, "\n== discrepancies ==");
            for d in &self.discrepancies {
                let _ = writeln!(s, "- {d}");
            }
        }
        if !self.timings.is_empty() {
            let _ = writeln!(s, "\n== timings ==");
            for (k, t) in &self.timings {
                let _ = writeln!(s, "{k}: {t:.3}s");
            }
        }
        s
    }
}

fn render_value(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => o
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) | Value::Array(_) if !is_flat(x) => format!("{pad}{k}:\n{}", render_value(x, indent + 1)),
                _ => format!("{pad}{k}: {}", inline(x)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(a) => a
            .iter()
            .map(|x| match x {
                Value::Object(_) | Value::Array(_) if !is_flat(x) => format!("{pad}-\n{}", render_value(x, indent + 1)),
                _ => format!("{pad}- {}", inline(x)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => format!("{pad}{}", inline(v)),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
