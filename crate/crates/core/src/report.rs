//! Report rendering. Every report is a sequence of records written either
//! as one JSON array or as CSV with one row per record. Nested values
//! become compact JSON inside a CSV cell, so both forms carry the same
//! rows.

use serde::Serialize;
use serde_json::Value;

/// Version of the record layouts documented in `docs/report-schema.json`.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render<T: Serialize>(records: &[T], format: Format) -> String {
    let values: Vec<Value> = records
        .iter()
        .map(|r| serde_json::to_value(r).expect("records serialize"))
        .collect();
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&values).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv_text(&values),
    }
}

fn csv_text(values: &[Value]) -> String {
    if values.is_empty() {
        return String::new();
    }
    let mut columns: Vec<String> = Vec::new();
    for v in values {
        if let Value::Object(map) = v {
            for k in map.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&columns).expect("in-memory write");
    for v in values {
        let row: Vec<String> = columns.iter().map(|c| cell(v.get(c))).collect();
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Bool(b)) => b.to_string(),
        Some(Value::Number(n)) => n.to_string(),
        Some(other) => other.to_string(),
    }
}
