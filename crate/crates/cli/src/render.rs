use serde::Serialize;
use serde_json::{json, Map, Value};

use plagsim::similarity::{SimilarityVector, FEATURE_NAMES};

use crate::{CliError, TOOL, VERSION};

pub const METRIC_DECIMALS: i32 = 3;
pub const SIMILARITY_DECIMALS: i32 = 1;

pub fn round(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    let r = (x * scale).round() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds every non-integer number in `v`.
pub fn round_floats(v: Value, decimals: i32) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round(n.as_f64().unwrap_or(0.0), decimals);
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(|x| round_floats(x, decimals)).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, x)| (k, round_floats(x, decimals))).collect()),
        other => other,
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// `{"tool", "version", "seed"}` merged with `body`.
pub fn stamped(seed: u64, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("tool".into(), json!(TOOL));
    map.insert("version".into(), json!(VERSION));
    map.insert("seed".into(), json!(seed));
    if let Value::Object(extra) = body {
        map.extend(extra);
    }
    Value::Object(map)
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn metadata(seed: u64, extra: &[(&'static str, String)]) -> Vec<(&'static str, String)> {
    let mut m = vec![("tool", TOOL.to_string()), ("version", VERSION.to_string()), ("seed", seed.to_string())];
    m.extend(extra.iter().cloned());
    m
}

pub fn scores_json(v: &SimilarityVector) -> Value {
    let mut map = Map::new();
    for (name, x) in FEATURE_NAMES.iter().zip(v.scores()) {
        map.insert(name.to_string(), json!(round(x, SIMILARITY_DECIMALS)));
    }
    map.insert("AVG".into(), json!(round(v.avg, SIMILARITY_DECIMALS)));
    map.insert("STDV".into(), json!(round(v.stdv, SIMILARITY_DECIMALS)));
    Value::Object(map)
}

pub const MATRIX_HEADER: [&str; 12] =
    ["SN", "SolutionI", "SolutionJ", "LCS", "N1", "N2", "N3", "GST1", "GST2", "GST3", "AVG", "STDV"];

pub fn matrix_record(sn: usize, left: &str, right: &str, v: &SimilarityVector) -> Vec<String> {
    let mut rec = vec![sn.to_string(), left.to_string(), right.to_string()];
    rec.extend(v.scores().iter().chain([&v.avg, &v.stdv]).map(|x| format!("{:.1}", round(*x, SIMILARITY_DECIMALS))));
    rec
}

/// Left-aligned first columns, right-aligned numbers, widths fitted to content.
pub fn text_table(header: &[&str], rows: &[Vec<String>], text_columns: usize) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| if i < text_columns { format!("{c:<w$}", w = widths[i]) } else { format!("{c:>w$}", w = widths[i]) })
            .collect();
        let mut s = parts.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn write_file(path: &std::path::Path, contents: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}
