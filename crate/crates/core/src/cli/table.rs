//! Plain-text rendering of JSON payloads as aligned `key  value` rows.
//!
//! Nested objects flatten to dotted paths and arrays of objects to indexed
//! paths (`rows[2].rho`), so every number in the JSON appears exactly once.

use serde_json::Value;

pub fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut rows = Vec::new();
    walk(value, String::new(), &mut rows);
    rows
}

fn walk(value: &Value, path: String, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let sub = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(v, sub, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                walk(v, format!("{path}[{i}]"), rows);
            }
        }
        _ => {
            let key = if path.is_empty() {
                "result".to_string()
            } else {
                path
            };
            let text = match value {
                Value::String(s) => s.clone(),
                Value::Null => "-".to_string(),
                other => other.to_string(),
            };
            rows.push((key, text));
        }
    }
}

pub fn render(rows: &[(String, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}
