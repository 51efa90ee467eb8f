use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::input::InputDescriptor;
use crate::Failure;

/// The machine-readable result of one invocation. Everything except
/// `timing` is a function of the inputs and flags.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: Option<InputDescriptor>,
    pub results: Value,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(command: &'static str, input: Option<InputDescriptor>, results: Value, started: Instant) -> Self {
        RunReport {
            tool: "drdom",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input,
            results,
            timing: Timing { elapsed_ms: started.elapsed().as_secs_f64() * 1e3 },
        }
    }

    /// Writes the JSON to `path`, or to stdout when `path` is `None`.
    pub fn emit(&self, path: Option<&Path>) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(self).expect("report serializes") + "\n";
        match path {
            Some(p) => write_file(p, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result serializes")
}

/// Prints aligned `key  value` rows to stderr.
pub fn table(rows: &[(&str, String)]) {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        eprintln!("{k:<width$}  {v}");
    }
}
