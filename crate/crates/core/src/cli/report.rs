use serde::Serialize;
use serde_json::{Map, Value};

/// Structured outcome of one verification run.
///
/// Apart from `timing_ms`, the report is a pure function of the check name,
/// `n`, `seed`, `sample_count` and the remaining flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub n: usize,
    pub seed: u64,
    pub sample_count: usize,
    pub passed: bool,
    /// Offending samples, first failure first; empty when `passed`.
    pub witnesses: Vec<Value>,
    pub timing_ms: u64,
    /// The statement the check certifies.
    pub paper_anchor: String,
    pub details: Map<String, Value>,
}

impl VerificationReport {
    pub fn new(check_name: &str, n: usize, seed: u64, paper_anchor: &str) -> Self {
        Self {
            check_name: check_name.to_string(),
            n,
            seed,
            sample_count: 0,
            passed: true,
            witnesses: Vec::new(),
            timing_ms: 0,
            paper_anchor: paper_anchor.to_string(),
            details: Map::new(),
        }
    }

    /// Records a failure. Only the first few witnesses are kept.
    pub fn fail(&mut self, witness: Value) {
        self.passed = false;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

const MAX_WITNESSES: usize = 5;

/// Canonical JSON: object keys sorted, two-space indentation, trailing newline.
pub fn emit_report(report: &VerificationReport) -> String {
    canonical_json(&report.to_value())
}

pub fn canonical_json(value: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut out = serde_json::to_string_pretty(&sort_keys(value)).expect("value serializes");
    out.push('\n');
    out
}

fn sort_keys(value: &Value) -> Value {
    match value {
        Value::Object(m) => {
            let sorted: std::collections::BTreeMap<&String, Value> =
                m.iter().map(|(k, v)| (k, sort_keys(v))).collect();
            Value::Object(sorted.into_iter().map(|(k, v)| (k.clone(), v)).collect())
        }
        Value::Array(a) => Value::Array(a.iter().map(sort_keys).collect()),
        other => other.clone(),
    }
}

/// Replaces every `timing_ms` field by zero, recursively.
pub fn strip_timing(value: &Value) -> Value {
    match value {
        Value::Object(m) => Value::Object(
            m.iter()
                .map(|(k, v)| {
                    if k == "timing_ms" {
                        (k.clone(), Value::from(0))
                    } else {
                        (k.clone(), strip_timing(v))
                    }
                })
                .collect(),
        ),
        Value::Array(a) => Value::Array(a.iter().map(strip_timing).collect()),
        other => other.clone(),
    }
}
