//! JSON and markdown rendering.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "–".into(),
        Value::String(s) => s.replace('|', "\\|"),
        other => other.to_string().replace('|', "\\|"),
    }
}

/// Markdown table from an array of flat objects; columns follow the first
/// row's key order.
pub fn markdown_table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return "_empty table_\n".into();
    };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = format!("| {} |\n", keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" | "));
    out += &format!("|{}\n", " --- |".repeat(keys.len()));
    for row in rows {
        let cells: Vec<String> = keys.iter().map(|k| cell(row.get(k.as_str()).unwrap_or(&Value::Null))).collect();
        out += &format!("| {} |\n", cells.join(" | "));
    }
    out
}

/// Two-column markdown table of an object's top-level fields.
pub fn markdown_fields(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let mut out = String::from("| field | value |\n| --- | --- |\n");
            for (k, v) in map {
                out += &format!("| {k} | {} |\n", cell(v));
            }
            out
        }
        other => format!("{}\n", cell(other)),
    }
}

pub fn render(v: &Value, md: bool) -> String {
    if !md {
        return serde_json::to_string_pretty(v).expect("serializable") + "\n";
    }
    match v.get("rows") {
        Some(Value::Array(rows)) => markdown_table(rows),
        _ => markdown_fields(v),
    }
}
