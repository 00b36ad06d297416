use serde::{Deserialize, Serialize};

use super::steps::run_step;
use super::{conclude, Certificate};
use crate::error::PipelineError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub steps: usize,
    pub mismatches: Vec<String>,
    pub conclusion_matches: bool,
}

impl ReplayReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.conclusion_matches
    }
}

/// Re-run every step from its recorded inputs and compare the serialized
/// results, then re-derive the conclusion.
pub fn replay(cert: &Certificate) -> Result<ReplayReport, PipelineError> {
    let mut mismatches = Vec::new();
    for (i, step) in cert.steps.iter().enumerate() {
        let again = run_step(&step.op, &step.inputs)?;
        let (x, y) = (serde_json::to_string(step)?, serde_json::to_string(&again)?);
        if x != y {
            mismatches.push(format!("step {i} ({}) differs", step.op));
        }
    }
    let (c, caveats) = conclude(cert.kind, &cert.inputs, &cert.steps);
    Ok(ReplayReport {
        steps: cert.steps.len(),
        mismatches,
        conclusion_matches: c == cert.conclusion && caveats == cert.caveats,
    })
}
