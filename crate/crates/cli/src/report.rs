//! Report assembly: every command produces one [`CommandOutput`], emitted
//! as stable JSON (`schema: 1`) or as plain text.
//!
//! Numeric values inside the result payload are rendered as strings so
//! that exact integers and fractions survive any JSON consumer; the
//! envelope fields (`schema`, `timing_ms`) stay native.

use serde_json::{json, Value};

/// What a command computed, before the envelope is added.
pub struct CommandOutput {
    /// Result payload; all numbers rendered as strings.
    pub payload: Value,
    /// False when a mathematical check failed (exit code 1).
    pub ok: bool,
    /// Window caveats, e.g. a regularity bound attained on the boundary.
    pub caveats: Vec<String>,
    /// Extra preformatted text blocks for the text format (tables).
    pub text_blocks: Vec<String>,
    /// The field-independent view compared across primes by
    /// `--check-prime`; defaults to the whole payload.
    pub check_view: Option<Value>,
}

impl CommandOutput {
    pub fn new(payload: Value) -> CommandOutput {
        CommandOutput {
            payload,
            ok: true,
            caveats: Vec::new(),
            text_blocks: Vec::new(),
            check_view: None,
        }
    }

    pub fn check_view(&self) -> &Value {
        self.check_view.as_ref().unwrap_or(&self.payload)
    }
}

/// Renders a value as a payload string (exactness over nativeness).
pub fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

/// The full report envelope.
pub fn envelope(
    command: &str,
    config: Value,
    out: &CommandOutput,
    timing_ms: u128,
) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "config": config,
        "ok": out.ok,
        "result": out.payload,
        "window_caveats": out.caveats,
        "timing_ms": timing_ms,
    })
}

/// Plain-text rendering of the same report.
pub fn render_text(command: &str, config: &Value, out: &CommandOutput) -> String {
    let mut lines = Vec::new();
    lines.push(format!("command: {command}"));
    if let Value::Object(map) = config {
        for (k, v) in map {
            if !v.is_null() {
                lines.push(format!("{k}: {}", scalar(v)));
            }
        }
    }
    render_value(&out.payload, 0, &mut lines);
    for block in &out.text_blocks {
        lines.push(String::new());
        lines.push(block.trim_end().to_string());
    }
    for caveat in &out.caveats {
        lines.push(format!("caveat: {caveat}"));
    }
    lines.push(format!("ok: {}", out.ok));
    lines.join("\n")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_value(v: &Value, indent: usize, lines: &mut Vec<String>) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        lines.push(format!("{pad}{k}:"));
                        render_value(val, indent + 1, lines);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        lines.push(format!("{pad}{k}:"));
                        for item in items {
                            lines.push(format!("{pad}  -"));
                            render_value(item, indent + 2, lines);
                        }
                    }
                    Value::Array(items) => {
                        let joined: Vec<String> = items.iter().map(scalar).collect();
                        lines.push(format!("{pad}{k}: [{}]", joined.join(", ")));
                    }
                    _ => lines.push(format!("{pad}{k}: {}", scalar(val))),
                }
            }
        }
        other => lines.push(format!("{pad}{}", scalar(other))),
    }
}
