//! JSON and CSV rendering. Floats use 17 significant digits so output is
//! byte-stable for a fixed configuration.

use std::str::FromStr;

use serde_json::{json, Map, Number, Value};
use univalent_core::Complex64;

pub const SCHEMA: u64 = 1;

pub fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&float_text(x)).expect("formatted float parses"))
    } else {
        Value::Null
    }
}

/// 17 significant digits with a signed exponent; negative zero prints as zero.
pub fn float_text(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let s = format!("{x:.16e}");
    match s.split_once('e') {
        Some((m, e)) if !e.starts_with('-') => format!("{m}e+{e}"),
        _ => s,
    }
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": real(z.re), "im": real(z.im) })
}

pub fn complex_list(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|&z| complex(z)).collect())
}

/// Starts a document with `schema` and `command`.
pub fn document(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m
}

pub fn render_json(doc: Map<String, Value>) -> String {
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}
