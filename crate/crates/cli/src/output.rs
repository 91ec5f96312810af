//! Canonical JSON and the run manifest.

use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Number, Value};
use sha2::{Digest, Sha256};

use crate::Cli;

/// What a command produced.
pub struct Emitted {
    pub stdout: String,
    /// A checked property failed; the process exits 1.
    pub failed: bool,
}

pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<abshift::Error> for Failure {
    fn from(e: abshift::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Rounds a float to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Rounds every float in `v` to 12 significant digits.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| Number::from_f64(round12(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect())
        }
        other => other,
    }
}

/// Canonical JSON document: command, parameters and mode flag first, then
/// the fields of `body` (or `body` under `"result"` if it is not an object).
pub fn document(cli: &Cli, command: &str, body: impl Serialize) -> String {
    let mut map = Map::new();
    map.insert("command".into(), Value::String(command.into()));
    let g = &cli.global;
    if let (Some(a), Some(b)) = (&g.alpha, &g.beta) {
        map.insert("alpha".into(), Value::String(a.to_string()));
        map.insert("beta".into(), Value::String(b.to_string()));
        if let Ok(p) = abshift::Params::new(a.clone(), b.clone()) {
            map.insert("main_mode".into(), Value::Bool(p.main_mode()));
        }
    }
    match serde_json::to_value(body).expect("report types serialize") {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("result".into(), other);
        }
    }
    let mut s =
        serde_json::to_string_pretty(&canonicalize(Value::Object(map))).expect("plain data");
    s.push('\n');
    s
}

/// Reproducibility record for one invocation.
#[derive(Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub subcommand: String,
    pub wall_time_seconds: f64,
    /// SHA-256 of the bytes written to standard output.
    pub output_digest: String,
}

impl RunManifest {
    pub fn new(cli: &Cli, stdout: &str, elapsed: Duration) -> Self {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION"),
            alpha: cli.global.alpha.as_ref().map(ToString::to_string),
            beta: cli.global.beta.as_ref().map(ToString::to_string),
            subcommand: crate::commands::command_name(&cli.command).into(),
            wall_time_seconds: elapsed.as_secs_f64(),
            output_digest: digest(stdout),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }
}

pub fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}
