//! Certified numerics for the common-zero problem: roots of `Q_n` on the
//! line `Re z = -1/2`, the maximal modulus, explicit analytic bounds and the
//! finite window scan.

mod bounds;
mod segment;
mod window;

pub use bounds::{
    bound_14_9, bound_14_9_at_modulus, c_bracket, c_small_threshold, final_proof_1_check, final_proof_2_c_max,
    general_bounds, height_bound_a1, height_bound_general, lmn3_c_max, lmn3_inequality, lmn3_rhs, lmn_lower,
    lmn_lower_dh, root_of_unity_exclusion, ten_delta_check, ten_delta_check_unity, GeneralBounds, ParityProfile,
};
pub use segment::{
    isolate_segment_roots, isolate_segment_roots_with, max_modulus, segment_polynomial, SegmentPoly, SegmentRoot,
};
pub use window::{close_window, WindowScan};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exactnum::RealInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Satisfied,
    Violated,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "violated",
            Verdict::Undecided => "undecided",
        };
        write!(f, "{s}")
    }
}

/// A recorded input or intermediate quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "lowercase")]
pub enum Value {
    Integer(String),
    /// `p/q` or an integer string.
    Rational(String),
    Interval(RealInterval),
    Text(String),
}

impl Value {
    pub fn int<T: Into<BigInt>>(v: T) -> Self {
        Value::Integer(v.into().to_string())
    }

    pub fn rational(q: &BigRational) -> Self {
        Value::Rational(rational_string(q))
    }
}

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: Vec<NamedValue>,
    pub value: RealInterval,
    pub verdict: Verdict,
    pub note: Option<String>,
}

impl BoundReport {
    pub fn new(name: &str, value: RealInterval, verdict: Verdict) -> Self {
        BoundReport { name: name.into(), inputs: Vec::new(), value, verdict, note: None }
    }

    pub fn with(mut self, name: &str, value: Value) -> Self {
        self.inputs.push(NamedValue { name: name.into(), value });
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn input(&self, name: &str) -> Option<&Value> {
        self.inputs.iter().find(|v| v.name == name).map(|v| &v.value)
    }
}

/// Verdict of `value < threshold` from interval endpoints.
pub fn verdict_lt(value: &RealInterval, threshold: &RealInterval) -> Verdict {
    if value.certainly_lt(threshold) {
        Verdict::Satisfied
    } else if threshold.certainly_le(value) {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

/// Verdict of `value <= threshold` from interval endpoints.
pub fn verdict_le(value: &RealInterval, threshold: &RealInterval) -> Verdict {
    if value.certainly_le(threshold) {
        Verdict::Satisfied
    } else if threshold.certainly_lt(value) {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

/// Bound `d h(alpha) <= dh` on degree times absolute height.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightBound {
    pub d: u64,
    pub dh: RealInterval,
}
