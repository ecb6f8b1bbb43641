use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use braid_monodromy::Error;

use crate::exit_code;

/// What a command produced, before formatting.
pub struct Outcome {
    pub text: String,
    pub value: Value,
    /// A check inside the command did not hold.
    pub failed: bool,
    /// Overrides the exit code derived from `failed`.
    pub code: Option<u8>,
}

impl Outcome {
    pub fn ok(text: String, value: Value) -> Self {
        Outcome { text, value, failed: false, code: None }
    }
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
pub struct Report {
    operation: &'static str,
    input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorBody>,
    ok: bool,
    timing_ms: f64,
    #[serde(skip)]
    text: String,
    #[serde(skip)]
    code: u8,
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        3 => "unsupported",
        _ => "input",
    }
}

impl Report {
    pub fn new(operation: &'static str, input: Value, result: braid_monodromy::Result<Outcome>, elapsed: Duration) -> Self {
        let timing_ms = elapsed.as_secs_f64() * 1000.0;
        match result {
            Ok(o) => {
                let code = o.code.unwrap_or(if o.failed { 1 } else { 0 });
                Report { operation, input, result: Some(o.value), error: None, ok: code == 0, timing_ms, text: o.text, code }
            }
            Err(e) => Report {
                operation,
                input,
                result: None,
                error: Some(ErrorBody { kind: error_kind(&e), message: e.to_string() }),
                ok: false,
                timing_ms,
                text: format!("error: {e}"),
                code: exit_code(&e),
            },
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }

    pub fn print(&self, json: bool) {
        // a closed pipe downstream is not an error worth reporting
        let _ = if json {
            writeln!(io::stdout(), "{}", serde_json::to_string_pretty(self).expect("reports serialize"))
        } else if self.error.is_some() {
            writeln!(io::stderr(), "{}", self.text)
        } else {
            writeln!(io::stdout(), "{}", self.text)
        };
    }
}
