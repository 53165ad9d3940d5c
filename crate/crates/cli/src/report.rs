//! Machine-readable report shape. Reruns with the same spec and seed are
//! byte-identical except for the timing field.

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
pub struct Report {
    pub spec: Value,
    pub properties: Value,
    pub paper_checks: Vec<PaperCheck>,
    pub timing: Timing,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct PaperCheck {
    pub id: String,
    /// "pass" | "fail" | "info"
    pub verdict: String,
    pub witnesses: Vec<String>,
}

#[derive(Serialize)]
pub struct Timing {
    pub seconds: f64,
}

impl Report {
    pub fn new(spec: Value, properties: Value, paper_checks: Vec<PaperCheck>, seconds: f64) -> Report {
        Report {
            spec,
            properties,
            paper_checks,
            timing: Timing { seconds },
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn any_failed(&self) -> bool {
        self.paper_checks.iter().any(|c| c.verdict == "fail")
    }
}
