//! Check reports: one record per executed theorem check, carrying both
//! sides of the identity and where each side was computed.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

/// One side-by-side comparison inside a check (a check may bundle several,
/// e.g. a grade identity and a cd identity).
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub what: String,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

/// The outcome of running one theorem check on one instance.
///
/// Field order is the stable machine-record order: theorem, instance,
/// comparisons, verdict, reason, millis, provenance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    /// Stable check identifier, e.g. `grade-cd-additivity`.
    pub theorem: String,
    /// Replayable instance rendering.
    pub instance: String,
    pub comparisons: Vec<Comparison>,
    pub verdict: Verdict,
    /// Populated for skips.
    pub reason: Option<String>,
    pub millis: u128,
    /// Which backends produced the left and right sides.
    pub provenance: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Human-readable single line.
    pub fn render_text(&self) -> String {
        let tag = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "skip",
        };
        let mut line = format!("[{}] {} :: {}", tag, self.theorem, self.instance);
        match self.verdict {
            Verdict::Skip => {
                if let Some(r) = &self.reason {
                    line.push_str(&format!(" ({})", r));
                }
            }
            _ => {
                for c in &self.comparisons {
                    let sym = if c.equal { "=" } else { "!=" };
                    line.push_str(&format!(" | {}: {} {} {}", c.what, c.left, sym, c.right));
                }
            }
        }
        line.push_str(&format!(" [{} ms; {}]", self.millis, self.provenance));
        line
    }

    /// Line-delimited machine record (JSON with fixed field order).
    pub fn render_record(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Fold a set of comparisons into a verdict.
pub fn verdict_of(comparisons: &[Comparison]) -> Verdict {
    if comparisons.iter().all(|c| c.equal) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
