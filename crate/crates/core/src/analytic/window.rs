//! Closing a finite window `(c_lo, c_hi]` of exponents for `a = 1`.
//!
//! A common zero at `(1, b, c)` with `zeta` of modulus `r` forces
//! `|c theta + m pi| <= tau` for some integer `m`, where
//! `theta = arg(1 + zeta^-b)` and `tau = (b+1) x / (1-x)`, `x = r^-c_lo`.
//! So `c` is within `tau/|theta|` of `m pi/|theta|`; each candidate `m` is
//! excluded by the distance from `m pi/|theta|` to the nearest integer.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::bounds::pow_u64;
use super::segment::SegmentRoot;
use super::{BoundReport, Value, Verdict};
use crate::error::AnalyticError;
use crate::exactnum::transcendental::pi;
use crate::exactnum::{nearest_integer_distance, ComplexBox, RealInterval};
use crate::par::par_map;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowScan {
    pub report: BoundReport,
    pub theta: RealInterval,
    /// `pi / |theta|`.
    pub period: RealInterval,
    /// Inclusive range of `m` examined; empty for a degenerate window.
    pub m_range: Option<(u64, u64)>,
    /// The first `m` that could not be excluded.
    pub unresolved: Option<u64>,
    /// True when that `m` is certainly within tolerance of an admissible
    /// integer, so more precision cannot exclude it.
    pub near_hit: bool,
}

enum MOutcome {
    Excluded,
    /// Enclosures too wide to decide.
    Ambiguous,
    /// Certainly within tolerance of an integer in the window.
    NearHit,
}

/// Scan all `m` whose `m pi / |theta|` may land in `(c_lo, c_hi]`.
/// Satisfied means no `c` in the window is admissible.
pub fn close_window(b: u64, zeta: &SegmentRoot, c_lo: u64, c_hi: u64, prec: u32) -> Result<WindowScan, AnalyticError> {
    let alpha = zeta.alpha();
    let p = prec.max(alpha.prec());
    let one = ComplexBox::real(RealInterval::one(p));
    let w = &one + &alpha.pow(b as u32).recip()?;
    let theta = w.arg()?;
    let abs_theta = theta.abs();
    if abs_theta.contains_zero() {
        return Err(AnalyticError::PreconditionUnverifiable("theta != 0".into()));
    }
    let period = pi(p).div(&abs_theta)?;
    let base = |verdict| {
        BoundReport::new("close_window", period.clone(), verdict)
            .with("b", Value::int(b))
            .with("c_lo", Value::int(c_lo))
            .with("c_hi", Value::int(c_hi))
            .with("theta", Value::Interval(theta.clone()))
    };
    if c_lo >= c_hi {
        let report = base(Verdict::Satisfied).with_note("empty window");
        return Ok(WindowScan { report, theta, period, m_range: None, unresolved: None, near_hit: false });
    }
    let r = alpha.abs();
    let x = pow_u64(&r, c_lo)?.recip()?;
    let tau = x.scale_int(b as i64 + 1).div(&(&RealInterval::one(p) - &x))?;
    let tol = tau.div(&abs_theta)?;
    // m pi/|theta| within 1 of (c_lo, c_hi] covers every candidate
    let per_lo = RealInterval::from_int(c_lo, p).div(&period)?;
    let per_hi = &RealInterval::from_int(c_hi + 1, p).div(&period)? + &RealInterval::one(p);
    let m_lo = per_lo.floor_lo().max(BigInt::one());
    let m_hi = per_hi.ceil_hi();
    let (m_lo, m_hi) = match (to_u64(&m_lo), to_u64(&m_hi)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AnalyticError::Invalid("m range does not fit in u64".into())),
    };
    let window = (BigInt::from(c_lo), BigInt::from(c_hi));
    let ms: Vec<u64> = (m_lo..=m_hi).collect();
    let outcomes = par_map(&ms, None, |&m| {
        let v = period.scale_int(m as i64);
        match nearest_integer_distance(&v) {
            Ok(ni) if !ni.ambiguous => {
                let c = ni.nearest.expect("unambiguous");
                if c <= window.0 || c > window.1 || tol.certainly_lt(&ni.distance) {
                    MOutcome::Excluded
                } else if ni.distance.certainly_le(&tol) {
                    MOutcome::NearHit
                } else {
                    MOutcome::Ambiguous
                }
            }
            _ => MOutcome::Ambiguous,
        }
    });
    let first = ms.iter().zip(&outcomes).find(|(_, o)| !matches!(o, MOutcome::Excluded));
    let unresolved = first.map(|(m, _)| *m);
    let near_hit = matches!(first, Some((_, MOutcome::NearHit)));
    let verdict = if unresolved.is_some() { Verdict::Undecided } else { Verdict::Satisfied };
    let mut report = base(verdict)
        .with("tolerance", Value::Interval(tol))
        .with("m_lo", Value::int(m_lo))
        .with("m_hi", Value::int(m_hi));
    if let Some(m) = unresolved {
        report = report.with_note(if near_hit {
            format!("m = {m} lands within tolerance of an integer in the window")
        } else {
            format!("m = {m} not excluded at {p} bits")
        });
    }
    Ok(WindowScan { report, theta, period, m_range: Some((m_lo, m_hi)), unresolved, near_hit })
}

fn to_u64(x: &BigInt) -> Option<u64> {
    if x.is_negative() {
        return None;
    }
    u64::try_from(x).ok()
}
