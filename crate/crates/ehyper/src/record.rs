//! One JSON line per run.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// A verified positive answer.
    Positive,
    /// A verified negative answer or a structured failure.
    Negative,
    /// The search stopped on its budget.
    Exhausted,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Positive => 0,
            Verdict::Negative | Verdict::Exhausted => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRecord {
    pub command: String,
    /// Every setting that influences the output, except thread count.
    pub config: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Recomputed from the host; always true when `witness` is present.
    pub verified: bool,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub version: String,
}

impl ResultRecord {
    pub fn new(command: &str, config: Value) -> Self {
        ResultRecord {
            command: command.to_string(),
            config,
            verdict: Verdict::Negative,
            witness: None,
            verified: false,
            details: Value::Null,
            elapsed_ms: None,
            version: VERSION.to_string(),
        }
    }

    /// Attaches a witness that has passed its re-check.
    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self.verified = true;
        self
    }

    pub fn to_line(&self) -> String {
        assert!(self.witness.is_none() || self.verified, "unverified witness in a record");
        serde_json::to_string(self).expect("records serialize")
    }

    /// Appends one line to `path`, creating the file if needed.
    pub fn append_to(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(f, "{}", self.to_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn timings_only_when_set() {
        let mut r = ResultRecord::new("x", json!({"a": 1}));
        assert!(!r.to_line().contains("elapsed_ms"));
        r.elapsed_ms = Some(3);
        assert!(r.to_line().contains("\"elapsed_ms\":3"));
    }

    #[test]
    fn witness_marks_verified() {
        let r = ResultRecord::new("x", Value::Null).with_witness(json!([1, 2]));
        assert!(r.verified);
        let back: Value = serde_json::from_str(&r.to_line()).unwrap();
        assert_eq!(back["witness"], json!([1, 2]));
        assert_eq!(back["verdict"], json!("negative"));
    }
}
