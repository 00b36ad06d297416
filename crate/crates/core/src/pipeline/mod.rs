//! Certification pipelines, replayable JSON certificates and sweeps.
//!
//! Every step is produced by [`run_step`] from its recorded inputs, so replay
//! is a re-run of the same dispatcher followed by a byte comparison.

mod certify;
mod replay;
mod steps;
mod sweep;

pub use certify::{
    certify_a1, certify_a1_with, certify_criteria, certify_general_bounds, certify_membership, certify_mod_p,
    certify_pair, certify_triple, conclude,
};
pub use replay::{replay, ReplayReport};
pub use steps::run_step;
pub use sweep::{run_sweep, SweepFilter, SweepMode, SweepSpec, SweepSummary};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analytic::{BoundReport, NamedValue, Value, Verdict};
use crate::error::PipelineError;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("pscert ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    A1Pipeline,
    Pair,
    Triple,
    ModP,
    Criteria,
    Membership,
    GeneralBounds,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        f.write_str(&s)
    }
}

/// One operation with its recorded inputs, outputs and verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub op: String,
    pub inputs: Vec<NamedValue>,
    pub outputs: Vec<NamedValue>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<BoundReport>,
}

impl Step {
    pub fn new(op: &str, inputs: Vec<NamedValue>) -> Self {
        Step { op: op.into(), inputs, outputs: Vec::new(), verdict: Verdict::Satisfied, reports: Vec::new() }
    }

    pub fn out(mut self, name: &str, value: Value) -> Self {
        self.outputs.push(NamedValue { name: name.into(), value });
        self
    }

    pub fn output(&self, name: &str) -> Option<&Value> {
        self.outputs.iter().find(|v| v.name == name).map(|v| &v.value)
    }

    pub fn input(&self, name: &str) -> Option<&Value> {
        self.inputs.iter().find(|v| v.name == name).map(|v| &v.value)
    }
}

/// Outcome of a certificate. Only `Undecided` is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// No nontrivial common zero (or the sequence is regular).
    Empty,
    /// Only the trivial zeros at `{0, -1}` or the cube roots of unity.
    NonemptyTrivial,
    Nonempty,
    /// Nothing to check (e.g. `Q_b` constant).
    Vacuous,
    Holds,
    Fails,
    Undecided,
}

impl Outcome {
    pub fn is_conclusive(self) -> bool {
        self != Outcome::Undecided
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Conclusion {
    pub outcome: Outcome,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub kind: CertificateKind,
    pub tool_version: String,
    pub inputs: Vec<NamedValue>,
    pub steps: Vec<Step>,
    pub caveats: Vec<String>,
    pub conclusion: Conclusion,
    /// Precisions tried, in order; the last one produced the recorded steps.
    pub precision_trace: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

impl Certificate {
    pub fn step(&self, op: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.op == op)
    }

    pub fn is_conclusive(&self) -> bool {
        self.conclusion.outcome.is_conclusive()
    }

    pub fn to_json(&self) -> Result<String, PipelineError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self, PipelineError> {
        let c: Certificate = serde_json::from_str(s)?;
        if c.schema != SCHEMA_VERSION {
            return Err(PipelineError::Invalid(format!("unsupported schema {}", c.schema)));
        }
        Ok(c)
    }

    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut out = format!("{} certificate ({})\n", self.kind, self.tool_version);
        for s in &self.steps {
            out.push_str(&format!("  [{}] {}", s.verdict, s.op));
            let ins: Vec<String> = s.inputs.iter().map(|v| format!("{}={}", v.name, short(&v.value))).collect();
            if !ins.is_empty() {
                out.push_str(&format!("({})", ins.join(", ")));
            }
            out.push('\n');
            for o in &s.outputs {
                out.push_str(&format!("      {} = {}\n", o.name, short(&o.value)));
            }
            for r in &s.reports {
                out.push_str(&format!("      {}: {} [{}]\n", r.name, r.value, r.verdict));
            }
        }
        for c in &self.caveats {
            out.push_str(&format!("  caveat: {c}\n"));
        }
        if let Some(c) = &self.comment {
            out.push_str(&format!("  comment: {c}\n"));
        }
        out.push_str(&format!("conclusion: {} - {}\n", self.conclusion.outcome, self.conclusion.statement));
        out
    }
}

fn short(v: &Value) -> String {
    match v {
        Value::Integer(s) | Value::Rational(s) | Value::Text(s) => s.clone(),
        Value::Interval(i) => i.to_string(),
    }
}

pub(crate) fn nv(name: &str, value: Value) -> NamedValue {
    NamedValue { name: name.into(), value }
}
