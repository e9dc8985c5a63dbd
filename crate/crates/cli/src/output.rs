//! Rendering of command reports as JSON, CSV or plain text.

use std::io::Write;

use anyhow::Result;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A report plus an optional table for CSV output.
#[derive(Clone, Debug)]
pub struct Output {
    pub report: Value,
    pub rows: Option<Vec<Value>>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn columns(rows: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    cols
}

fn write_csv(out: &mut impl Write, rows: &[Value]) -> Result<()> {
    let cols = columns(rows);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&cols)?;
    for r in rows {
        let empty = Map::new();
        let m = r.as_object().unwrap_or(&empty);
        w.write_record(cols.iter().map(|c| m.get(c).map(cell).unwrap_or_default()))?;
    }
    w.flush()?;
    Ok(())
}

fn write_text(out: &mut impl Write, v: &Value, indent: usize) -> Result<()> {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                match v {
                    Value::Object(_) => {
                        writeln!(out, "{pad}{k}:")?;
                        write_text(out, v, indent + 1)?;
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        writeln!(out, "{pad}{k}:")?;
                        for item in items {
                            writeln!(out, "{pad}  -")?;
                            write_text(out, item, indent + 2)?;
                        }
                    }
                    _ => writeln!(out, "{pad}{k}: {}", cell(v))?,
                }
            }
        }
        other => writeln!(out, "{pad}{}", cell(other))?,
    }
    Ok(())
}

/// Writes `output` to `out` in the requested format.
pub fn render(out: &mut impl Write, output: &Output, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &output.report)?;
            writeln!(out)?;
        }
        Format::Csv => match &output.rows {
            Some(rows) => write_csv(out, rows)?,
            None => write_csv(out, std::slice::from_ref(&flatten_top(&output.report)))?,
        },
        Format::Text => write_text(out, &output.report, 0)?,
    }
    Ok(())
}

/// Top-level fields only, nested values as compact JSON.
fn flatten_top(v: &Value) -> Value {
    match v {
        Value::Object(m) => Value::Object(
            m.iter()
                .map(|(k, v)| (k.clone(), if v.is_object() || v.is_array() { Value::String(v.to_string()) } else { v.clone() }))
                .collect(),
        ),
        other => other.clone(),
    }
}
