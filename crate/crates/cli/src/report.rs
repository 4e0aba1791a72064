//! What a command hands back to `main`: a JSON value, a text rendering and the
//! exit status it calls for.

use serde::Serialize;
use serde_json::Value;

pub struct Report {
    pub json: Value,
    pub text: String,
    /// The run found a counterexample.
    pub counterexample: bool,
    /// The run stopped at a truncation that more depth or horizon would lift.
    pub exhausted: Option<String>,
}

/// The serialized name of a unit variant, or the `kind` of a tagged one, so
/// that text and JSON reports spell verdicts the same way.
pub fn tag<T: Serialize>(t: &T) -> String {
    match serde_json::to_value(t).unwrap_or(Value::Null) {
        Value::String(s) => s,
        Value::Object(o) => o.get("kind").and_then(Value::as_str).unwrap_or("?").to_string(),
        other => other.to_string(),
    }
}

pub fn to_json<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}
