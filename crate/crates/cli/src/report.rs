//! Report assembly. Reports are deterministic: identical manifests produce
//! byte-identical output (canonical polynomial printing, sorted JSON keys),
//! so archived runs diff cleanly.

use serde_json::{json, Value};

pub const CURVATURE_CONVENTION: &str =
    "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z";
pub const CONDITION_ORIENTATION: &str =
    "residuals are criticality-condition left-hand sides; the interpolating field is their negation";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub human_lines: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let doc = json!({
                    "command": self.command,
                    "conventions": {
                        "curvature": CURVATURE_CONVENTION,
                        "orientation": CONDITION_ORIENTATION,
                    },
                    "inputs": self.inputs,
                    "results": self.results,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("report json");
                s.push('\n');
                s
            }
            Format::Human => {
                let mut out = String::new();
                out.push_str(&format!(
                    "sesqui {} — {}\n",
                    env!("CARGO_PKG_VERSION"),
                    self.command
                ));
                out.push_str(&format!("curvature convention: {CURVATURE_CONVENTION}\n"));
                out.push_str(&format!("orientation: {CONDITION_ORIENTATION}\n"));
                out.push_str("inputs:\n");
                render_value(&mut out, &self.inputs, 1);
                for line in &self.human_lines {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn render_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, v, indent + 1);
                    }
                    Value::String(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}: |\n"));
                        let inner = "  ".repeat(indent + 1);
                        for line in s.lines() {
                            out.push_str(&format!("{inner}{line}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", plain(v))),
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(out, v, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", plain(v))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", plain(value))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
