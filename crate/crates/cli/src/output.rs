//! Record emission: JSON lines by default, CSV or text on request.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Wraps a serializable value as `{"record": kind, ...fields}`.
pub fn record<T: Serialize>(kind: &str, value: &T) -> Value {
    let mut map = Map::new();
    map.insert("record".into(), Value::String(kind.into()));
    match serde_json::to_value(value).expect("records serialize") {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("value".into(), other);
        }
    }
    Value::Object(map)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Writes records; CSV takes its columns from the first record.
pub fn emit(records: &[Value], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Csv => {
            let Some(Value::Object(first)) = records.first() else { return Ok(()) };
            let columns: Vec<&String> = first.keys().collect();
            let mut w = csv::Writer::from_writer(out);
            w.write_record(columns.iter().map(|c| c.as_str()))?;
            for r in records {
                w.write_record(columns.iter().map(|c| r.get(c.as_str()).map(cell).unwrap_or_default()))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                if let Value::Object(m) = r {
                    let line: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
        }
    }
    Ok(())
}
