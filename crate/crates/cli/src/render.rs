//! Serialization of a [`Report`]: pretty JSON for the structured form and an
//! indented `key: value` outline for the text form. Both follow the field order
//! of the report types, so output is byte-stable for a given report.

use serde_json::Value;

use crate::job::Format;
use crate::report::Report;

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Structured => to_structured(report),
        Format::Text => to_text(report),
    }
}

pub fn to_structured(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report is plain data");
    out.push('\n');
    out
}

pub fn from_structured(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

pub fn to_text(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report is plain data");
    let mut out = String::new();
    if let Value::Object(map) = &value {
        for (k, v) in map {
            write_entry(&mut out, 0, k, v);
        }
    }
    out
}

/// Scalars and arrays nested only from scalars print on one line.
fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts = items.iter().map(scalar).collect::<Option<Vec<_>>>()?;
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn write_entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                write_entry(out, depth + 1, k, x);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                write_entry(out, depth + 1, &format!("[{i}]"), x);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
