//! Exact scalars and certified interval arithmetic.

pub mod complex;
pub mod dyadic;
pub mod expr;
pub mod fp;
pub mod interval;
pub mod transcendental;
pub mod unity;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use complex::ComplexBox;
pub use dyadic::{Dyadic, Round};
pub use expr::Expr;
pub use fp::PrimeFieldElem;
pub use interval::RealInterval;
pub use unity::UnityRoot;

use crate::error::NumError;

pub type Rational = BigRational;

pub const DEFAULT_START_BITS: u32 = 64;
pub const DEFAULT_CAP_BITS: u32 = 16384;
pub const MAX_PRECISION_ENV: &str = "PSCERT_MAX_PRECISION";

/// Start precision and hard cap for refinement loops. Precision doubles
/// between attempts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub start: u32,
    pub cap: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start: DEFAULT_START_BITS, cap: DEFAULT_CAP_BITS }
    }
}

impl PrecisionPolicy {
    /// Defaults, with the cap taken from `PSCERT_MAX_PRECISION` when set.
    pub fn from_env() -> Self {
        let mut p = PrecisionPolicy::default();
        if let Some(cap) = std::env::var(MAX_PRECISION_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            p.cap = cap;
            p.start = p.start.min(cap);
        }
        p
    }

    pub fn with_start(mut self, bits: u32) -> Self {
        self.start = bits.max(2);
        self.cap = self.cap.max(self.start);
        self
    }

    pub fn with_cap(mut self, bits: u32) -> Self {
        self.cap = bits.max(2);
        self.start = self.start.min(self.cap);
        self
    }

    /// Precisions tried in order: start, 2*start, ... up to and including the cap.
    pub fn ladder(&self) -> Vec<u32> {
        let mut out = vec![self.start];
        let mut p = self.start;
        while p < self.cap {
            p = (p * 2).min(self.cap);
            out.push(p);
        }
        out
    }

    /// Run `f` at increasing precision until it returns `Some`.
    pub fn refine<T>(&self, mut f: impl FnMut(u32) -> Option<T>) -> Result<(T, u32), NumError> {
        for p in self.ladder() {
            if let Some(v) = f(p) {
                return Ok((v, p));
            }
        }
        Err(NumError::PrecisionExhausted { cap: self.cap })
    }
}

/// Distance from an enclosed real to the nearest integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearestInteger {
    pub distance: RealInterval,
    /// The integer realizing the distance, when the enclosure determines it.
    pub nearest: Option<BigInt>,
    pub ambiguous: bool,
}

/// Encloses `min_m |x - m|`. When `x` straddles a half-integer the nearest
/// integer is not determined and the conservative envelope `[0, 1/2]` is
/// returned with `ambiguous` set.
pub fn nearest_integer_distance(x: &RealInterval) -> Result<NearestInteger, NumError> {
    let quarter = BigRational::new(1.into(), 4.into());
    if !x.width_below(&quarter) {
        return Err(NumError::AmbiguousEnclosure);
    }
    let prec = x.prec();
    let half = Dyadic::new(1.into(), -1);
    // nearest integer to each endpoint: floor(v + 1/2)
    let n_lo = x.lo().add(&half).floor_int();
    let n_hi = x.hi().add(&half).floor_int();
    if n_lo != n_hi {
        let envelope = RealInterval::new(Dyadic::zero(), half, prec);
        return Ok(NearestInteger { distance: envelope, nearest: None, ambiguous: true });
    }
    let shifted = x - &RealInterval::from_int(n_lo.clone(), prec);
    Ok(NearestInteger { distance: shifted.abs(), nearest: Some(n_lo), ambiguous: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> RealInterval {
        RealInterval::new(Dyadic::from_f64(lo), Dyadic::from_f64(hi), 64)
    }

    #[test]
    fn nearest_integer_examples() {
        let r = nearest_integer_distance(&iv(5840.32375, 5840.32376)).unwrap();
        assert!(r.distance.lo_f64() >= 0.3237 && r.distance.hi_f64() <= 0.3238);
        assert_eq!(r.nearest, Some(BigInt::from(5840)));
        let r = nearest_integer_distance(&iv(7.0, 7.0)).unwrap();
        assert!(r.distance.is_zero_point());
        let r = nearest_integer_distance(&iv(2.49, 2.51)).unwrap();
        assert!(r.ambiguous && r.distance.lo_f64() <= 0.01 && r.distance.hi_f64() >= 0.49);
        assert!(nearest_integer_distance(&iv(1.0, 1.3)).is_err());
        let r = nearest_integer_distance(&iv(-3.9, -3.8)).unwrap();
        assert_eq!(r.nearest, Some(BigInt::from(-4)));
    }

    #[test]
    fn policy_ladder() {
        let p = PrecisionPolicy { start: 64, cap: 300 };
        assert_eq!(p.ladder(), vec![64, 128, 256, 300]);
        assert_eq!(p.refine(|b| (b > 200).then_some(b)).unwrap(), (256, 256));
        assert!(PrecisionPolicy { start: 8, cap: 16 }.refine(|_| None::<()>).is_err());
    }
}
