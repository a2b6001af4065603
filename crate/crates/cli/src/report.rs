//! The report envelope and its JSON/CSV renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "beurling";

/// One report per invocation.
///
/// Non-finite numbers are rendered as `null`, so the JSON text always
/// round-trips through this type unchanged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub inputs: Value,
    pub result: Value,
    pub seed: u64,
}

impl ReportEnvelope {
    pub fn new(command: Vec<String>, inputs: Value, result: Value, seed: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.into(),
            version: beurling::VERSION.into(),
            command,
            inputs,
            result,
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    /// `path,value` rows for every leaf of the envelope, arrays indexed by
    /// position.
    pub fn to_csv(&self) -> String {
        let tree = serde_json::to_value(self).expect("envelope serializes");
        let mut rows = Vec::new();
        flatten(&tree, String::new(), &mut rows);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["path", "value"]).expect("in-memory write");
        for (p, v) in rows {
            w.write_record([p, v]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

fn flatten(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(x, join(k), out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        Value::Null => out.push((path, String::new())),
        other => out.push((path, other.to_string())),
    }
}
