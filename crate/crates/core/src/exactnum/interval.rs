//! Outward-rounded real intervals with dyadic endpoints.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dyadic::{Dyadic, Round};
use crate::error::NumError;

/// Closed interval `[lo, hi]`. Every operation returns an enclosure of the
/// exact image, with endpoints rounded outward to `prec` significant bits.
#[derive(Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval with lo > hi: {lo:?} {hi:?}");
        RealInterval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up), prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Self {
        RealInterval::new(x.clone(), x, prec)
    }

    pub fn from_int<T: Into<BigInt>>(v: T, prec: u32) -> Self {
        RealInterval::point(Dyadic::from_int(v), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        RealInterval {
            lo: Dyadic::from_rational(q, prec, Round::Down),
            hi: Dyadic::from_rational(q, prec, Round::Up),
            prec,
        }
    }

    pub fn from_ratio(n: i64, d: i64, prec: u32) -> Self {
        RealInterval::from_rational(&BigRational::new(n.into(), d.into()), prec)
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        RealInterval::point(Dyadic::from_f64(x), prec)
    }

    pub fn zero(prec: u32) -> Self {
        RealInterval::point(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        RealInterval::point(Dyadic::one(), prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        RealInterval::new(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).shl(-1)
    }

    /// Upper bound on the half-width.
    pub fn rad(&self) -> Dyadic {
        self.width().shl(-1)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        self.lo.to_rational() <= *q && *q <= self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn subset_of(&self, other: &RealInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certainly strictly less than `other` everywhere.
    pub fn certainly_lt(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &RealInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64()
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    fn merged_prec(&self, other: &RealInterval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.merged_prec(other),
        )
    }

    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then(|| RealInterval::new(lo, hi, self.merged_prec(other)))
    }

    pub fn abs(&self) -> RealInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            RealInterval::new(Dyadic::zero(), self.lo.abs().max(self.hi.clone()), self.prec)
        }
    }

    pub fn max(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(
            self.lo.clone().max(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.merged_prec(other),
        )
    }

    pub fn min(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().min(other.hi.clone()),
            self.merged_prec(other),
        )
    }

    pub fn sqr(&self) -> RealInterval {
        let a = self.abs();
        RealInterval::new(a.lo.mul(&a.lo), a.hi.mul(&a.hi), self.prec)
    }

    /// Integer power with directed rounding at every squaring step.
    pub fn pow(&self, n: u32) -> RealInterval {
        if n == 0 {
            return RealInterval::one(self.prec);
        }
        let a = self.abs();
        let lo_mag = pow_directed(&a.lo, n, self.prec, Round::Down);
        let hi_mag = pow_directed(&a.hi, n, self.prec, Round::Up);
        if n.is_multiple_of(2) || !self.lo.is_negative() {
            if n.is_multiple_of(2) && self.contains_zero() {
                return RealInterval::new(Dyadic::zero(), hi_mag, self.prec);
            }
            return RealInterval::new(lo_mag, hi_mag, self.prec);
        }
        // Odd power: monotone.
        let lo = signed_pow(&self.lo, n, self.prec, Round::Down);
        let hi = signed_pow(&self.hi, n, self.prec, Round::Up);
        RealInterval::new(lo, hi, self.prec)
    }

    pub fn recip(&self) -> Result<RealInterval, NumError> {
        if self.contains_zero() {
            return Err(NumError::Domain("reciprocal of an interval containing 0".into()));
        }
        let one = Dyadic::one();
        Ok(RealInterval::new(
            one.div(&self.hi, self.prec, Round::Down),
            one.div(&self.lo, self.prec, Round::Up),
            self.prec,
        ))
    }

    pub fn div(&self, other: &RealInterval) -> Result<RealInterval, NumError> {
        if other.contains_zero() {
            return Err(NumError::Domain("division by an interval containing 0".into()));
        }
        let p = self.merged_prec(other);
        let cands = [(&self.lo, &other.lo), (&self.lo, &other.hi), (&self.hi, &other.lo), (&self.hi, &other.hi)];
        let lo = cands.iter().map(|(a, b)| a.div(b, p, Round::Down)).min().unwrap();
        let hi = cands.iter().map(|(a, b)| a.div(b, p, Round::Up)).max().unwrap();
        Ok(RealInterval::new(lo, hi, p))
    }

    pub fn sqrt(&self) -> Result<RealInterval, NumError> {
        if self.lo.is_negative() {
            return Err(NumError::Domain("sqrt of an interval with negative part".into()));
        }
        Ok(RealInterval::new(self.lo.sqrt(self.prec, Round::Down), self.hi.sqrt(self.prec, Round::Up), self.prec))
    }

    /// Multiply by `2^k` exactly.
    pub fn shl(&self, k: i64) -> RealInterval {
        RealInterval { lo: self.lo.shl(k), hi: self.hi.shl(k), prec: self.prec }
    }

    pub fn scale_int(&self, k: i64) -> RealInterval {
        self * &RealInterval::from_int(k, self.prec)
    }

    /// Widen symmetrically by a nonnegative error bound.
    pub fn inflate(&self, err: &Dyadic) -> RealInterval {
        RealInterval::new(self.lo.sub(err), self.hi.add(err), self.prec)
    }

    pub fn floor_lo(&self) -> BigInt {
        self.lo.floor_int()
    }

    pub fn ceil_hi(&self) -> BigInt {
        self.hi.ceil_int()
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_zero_point(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn to_hex_pair(&self) -> [String; 2] {
        [self.lo.to_hex(), self.hi.to_hex()]
    }

    pub fn from_hex_pair(lo: &str, hi: &str, prec: u32) -> Option<RealInterval> {
        let lo = Dyadic::from_hex(lo)?;
        let hi = Dyadic::from_hex(hi)?;
        (lo <= hi).then_some(RealInterval { lo, hi, prec })
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64()
    }

    pub fn width_below(&self, w: &BigRational) -> bool {
        self.width().to_rational() < *w
    }
}

fn pow_directed(x: &Dyadic, n: u32, prec: u32, dir: Round) -> Dyadic {
    debug_assert!(!x.is_negative());
    let mut result = Dyadic::one();
    let mut base = x.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).round(prec + 8, dir);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).round(prec + 8, dir);
        }
    }
    result.round(prec, dir)
}

fn signed_pow(x: &Dyadic, n: u32, prec: u32, dir: Round) -> Dyadic {
    if x.is_negative() {
        let flip = if dir == Round::Down { Round::Up } else { Round::Down };
        pow_directed(&x.abs(), n, prec, flip).neg()
    } else {
        pow_directed(x, n, prec, dir)
    }
}

impl Add for &RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(self.lo.add(&rhs.lo), self.hi.add(&rhs.hi), self.merged_prec(rhs))
    }
}

impl Sub for &RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(self.lo.sub(&rhs.hi), self.hi.sub(&rhs.lo), self.merged_prec(rhs))
    }
}

impl Mul for &RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: &RealInterval) -> RealInterval {
        let p = self.merged_prec(rhs);
        if !self.lo.is_negative() && !rhs.lo.is_negative() {
            return RealInterval::new(self.lo.mul(&rhs.lo), self.hi.mul(&rhs.hi), p);
        }
        let c = [self.lo.mul(&rhs.lo), self.lo.mul(&rhs.hi), self.hi.mul(&rhs.lo), self.hi.mul(&rhs.hi)];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RealInterval::new(lo, hi, p)
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RealInterval {
            type Output = RealInterval;
            fn $m(self, rhs: RealInterval) -> RealInterval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RealInterval> for RealInterval {
            type Output = RealInterval;
            fn $m(self, rhs: &RealInterval) -> RealInterval {
                (&self).$m(rhs)
            }
        }
        impl $tr<RealInterval> for &RealInterval {
            type Output = RealInterval;
            fn $m(self, rhs: RealInterval) -> RealInterval {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        -&self
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]@{}", self.lo.to_f64(), self.hi.to_f64(), self.prec)
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalWire {
    lo: String,
    hi: String,
    prec: u32,
    #[serde(default, skip_deserializing)]
    approx: String,
}

/// Endpoints as hex-mantissa strings (`0x1bp-3`), plus a decimal hint that
/// is ignored when reading back.
impl Serialize for RealInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let [lo, hi] = self.to_hex_pair();
        IntervalWire { lo, hi, prec: self.prec, approx: format_decimal(self, 16) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RealInterval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = IntervalWire::deserialize(d)?;
        RealInterval::from_hex_pair(&w.lo, &w.hi, w.prec)
            .ok_or_else(|| serde::de::Error::custom("bad interval endpoints"))
    }
}

impl Default for RealInterval {
    fn default() -> Self {
        RealInterval { lo: Dyadic::zero(), hi: Dyadic::zero(), prec: 64 }
    }
}

/// Decimal rendering of an enclosure, `digits` significant digits of the midpoint.
pub fn format_decimal(x: &RealInterval, digits: usize) -> String {
    let mid = x.mid().to_rational();
    rational_to_decimal(&mid, digits)
}

pub fn rational_to_decimal(q: &BigRational, digits: usize) -> String {
    use num_traits::Signed;
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let int_part = a.to_integer();
    let mut frac = a - BigRational::from_integer(int_part.clone());
    let int_digits = if int_part.is_zero() { 0 } else { int_part.to_string().len() };
    let nfrac = digits.saturating_sub(int_digits).max(1);
    let ten = BigInt::from(10);
    let mut s = String::new();
    for _ in 0..nfrac {
        frac *= BigRational::from_integer(ten.clone());
        let d = frac.to_integer();
        s.push_str(&d.to_string());
        frac -= BigRational::from_integer(d);
    }
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, s)
}
