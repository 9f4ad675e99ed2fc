use serde_json::{json, Map, Value};

use crate::{OutputFormat, Report, RunConfig, SCHEMA_VERSION};

/// Half-integer exponents appear in files as the integers `2 e`.
const EXPONENT_ENCODING: &str = "doubled";

fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 || digits == 0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

fn apply_precision(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round_sig(x, digits))) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(|x| apply_precision(x, digits)),
        Value::Object(o) => o.values_mut().for_each(|x| apply_precision(x, digits)),
        _ => {}
    }
}

pub(crate) fn render(config: &RunConfig, report: &Report) -> String {
    let mut result = report.result.clone();
    apply_precision(&mut result, config.precision);
    match config.output_format {
        OutputFormat::Json => {
            let env = json!({
                "schema_version": SCHEMA_VERSION,
                "exponent_encoding": EXPONENT_ENCODING,
                "config": config,
                "status": if report.failure.is_some() { "certification_failed" } else { "ok" },
                "result": result,
            });
            let mut s = serde_json::to_string_pretty(&env).expect("reports are valid JSON");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(config, &result),
    }
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        other => out.push((prefix.to_string(), other.clone())),
    }
}

/// A `rows` array of objects becomes a table with the first row's columns;
/// anything else becomes `key,value` pairs.
fn render_csv(config: &RunConfig, result: &Value) -> String {
    let mut s = format!(
        "# schema_version={SCHEMA_VERSION} command={} exponent_encoding={EXPONENT_ENCODING}\n",
        config.command
    );
    if let Some(rows) = result.get("rows").and_then(Value::as_array) {
        let flat: Vec<Map<String, Value>> = rows
            .iter()
            .map(|r| {
                let mut pairs = Vec::new();
                flatten("", r, &mut pairs);
                pairs.into_iter().collect()
            })
            .collect();
        if let Some(first) = flat.first() {
            let cols: Vec<&String> = first.keys().collect();
            s += &cols.iter().map(|c| cell(&Value::String((*c).clone()))).collect::<Vec<_>>().join(",");
            s.push('\n');
            for r in &flat {
                let line: Vec<String> = cols.iter().map(|c| cell(r.get(*c).unwrap_or(&Value::Null))).collect();
                s += &line.join(",");
                s.push('\n');
            }
        }
        return s;
    }
    s += "key,value\n";
    let mut pairs = Vec::new();
    flatten("", result, &mut pairs);
    for (k, v) in pairs {
        s += &format!("{},{}\n", cell(&Value::String(k)), cell(&v));
    }
    s
}
