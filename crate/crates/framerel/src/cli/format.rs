//! Deterministic numeric and document formatting for reports and tables.
//!
//! Every float that reaches an output stream goes through
//! [`format_significant`]: 12 significant digits, plain decimal inside
//! [1e-4, 1e6], scientific outside. Reports must be byte-identical across
//! runs, so serde_json's shortest-roundtrip float printing is bypassed in
//! favor of this fixed rule, and object keys rely on the sorted map
//! ordering serde_json gives by default.

use serde_json::Value;

const SIGNIFICANT_DIGITS: i32 = 12;

/// Fixed 12-significant-digit rendering of a float.
pub fn format_significant(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if (1e-4..=1e6).contains(&a) {
        let digits_before = a.log10().floor() as i32 + 1;
        let decimals = (SIGNIFICANT_DIGITS - digits_before).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{:.*e}", (SIGNIFICANT_DIGITS - 1) as usize, v)
    }
}

fn emit_scalar(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else {
                out.push_str(&format_significant(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serialization"))
        }
        _ => unreachable!("emit_scalar called on a composite value"),
    }
}

fn emit(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let pad_inner = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad_inner);
                emit(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad_inner);
                out.push_str(&serde_json::to_string(key).expect("key serialization"));
                out.push_str(": ");
                emit(item, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
        scalar => emit_scalar(scalar, out),
    }
}

/// Pretty-printed JSON with the fixed float rule. serde_json's default map
/// keeps keys sorted, which pins the field order.
pub fn value_to_json(v: &Value) -> String {
    let mut out = String::new();
    emit(v, 0, &mut out);
    out.push('\n');
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn scalar_to_csv(v: &Value) -> String {
    match v {
        Value::Null => "null".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                u.to_string()
            } else if let Some(i) = n.as_i64() {
                i.to_string()
            } else {
                format_significant(n.as_f64().unwrap_or(f64::NAN))
            }
        }
        Value::String(s) => csv_escape(s),
        _ => unreachable!("scalar_to_csv called on a composite value"),
    }
}

fn flatten(v: &Value, path: String, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                rows.push((path, String::new()));
                return;
            }
            for (i, item) in items.iter().enumerate() {
                let child = if path.is_empty() { i.to_string() } else { format!("{path}.{i}") };
                flatten(item, child, rows);
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                rows.push((path, String::new()));
                return;
            }
            for (key, item) in map {
                let child =
                    if path.is_empty() { key.clone() } else { format!("{path}.{key}") };
                flatten(item, child, rows);
            }
        }
        scalar => rows.push((path, scalar_to_csv(scalar))),
    }
}

/// Flattened key,value rendering of a report for `--format csv`.
pub fn value_to_flat_csv(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(v, String::new(), &mut rows);
    let mut out = String::from("key,value\n");
    for (key, value) in rows {
        out.push_str(&csv_escape(&key));
        out.push(',');
        out.push_str(&value);
        out.push('\n');
    }
    out
}

/// A rectangular numeric table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&v| format_significant(v)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::json!({
            "columns": self.columns,
            "rows": self.rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(-0.0), "0");
        assert_eq!(format_significant(0.5), "0.500000000000");
        assert_eq!(format_significant(2.0), "2.00000000000");
        assert_eq!(format_significant(-1.5), "-1.50000000000");
        assert_eq!(format_significant(500000.0), "500000.000000");
        assert_eq!(format_significant(0.0001), "0.000100000000000");
        assert_eq!(format_significant(1e-5), "1.00000000000e-5");
        assert_eq!(format_significant(2e7), "2.00000000000e7");
        assert_eq!(format_significant(0.5641895835477563), "0.564189583548");
    }

    #[test]
    fn json_emission_is_sorted_and_fixed_width() {
        let v = json!({"b": 0.5, "a": {"z": 1u32, "y": [1.0, 0.0]}, "c": null});
        let text = value_to_json(&v);
        assert_eq!(
            text,
            "{\n  \"a\": {\n    \"y\": [\n      1.00000000000,\n      0\n    ],\n    \"z\": 1\n  },\n  \"b\": 0.500000000000,\n  \"c\": null\n}\n"
        );
    }

    #[test]
    fn flat_csv_paths() {
        let v = json!({"a": {"b": [true, 0.25]}, "kind": "demo"});
        let text = value_to_flat_csv(&v);
        assert_eq!(text, "key,value\na.b.0,true\na.b.1,0.250000000000\nkind,demo\n");
    }

    #[test]
    fn table_round_trip_forms() {
        let t = Table {
            columns: vec!["x".into(), "p0".into()],
            rows: vec![vec![0.0, 0.5], vec![1.0, 0.25]],
        };
        assert_eq!(t.to_csv(), "x,p0\n0,0.500000000000\n1.00000000000,0.250000000000\n");
        let v = t.to_json_value();
        assert_eq!(v["columns"][1], "p0");
    }
}
