//! Elementary functions on intervals via argument-reduced series with explicit
//! tail bounds. Constants are cached per precision.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::dyadic::Dyadic;
use super::interval::RealInterval;
use crate::error::NumError;

const GUARD: u32 = 24;

fn cache() -> &'static Mutex<HashMap<(u8, u32), RealInterval>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u32), RealInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(tag: u8, prec: u32, f: impl FnOnce() -> RealInterval) -> RealInterval {
    if let Some(v) = cache().lock().unwrap().get(&(tag, prec)) {
        return v.clone();
    }
    let v = f();
    cache().lock().unwrap().insert((tag, prec), v.clone());
    v
}

/// `2^-k` as a dyadic.
fn ulp(k: u32) -> Dyadic {
    Dyadic::one().shl(-(k as i64))
}

/// Alternating series for `atan(1/k)`.
fn atan_inv(k: i64, w: u32) -> RealInterval {
    let x = RealInterval::from_ratio(1, k, w);
    let x2 = x.sqr();
    let mut power = x.clone();
    let mut sum = RealInterval::zero(w);
    let mut j: i64 = 0;
    loop {
        let term = power.div(&RealInterval::from_int(2 * j + 1, w)).unwrap();
        if j % 2 == 0 {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
        power = &power * &x2;
        j += 1;
        if power.hi() < &ulp(w + 2) {
            // Next term bounds the tail of an alternating decreasing series.
            return sum.inflate(power.hi());
        }
    }
}

pub fn pi(prec: u32) -> RealInterval {
    cached(0, prec, || {
        let w = prec + GUARD;
        let a = atan_inv(5, w).scale_int(16);
        let b = atan_inv(239, w).scale_int(4);
        (&a - &b).with_prec(prec)
    })
}

/// `atanh` series for `|z| <= 1/3`, tail bounded by `(9/8)|z|^(2N+3)/(2N+3)`.
fn atanh_small(z: &RealInterval, w: u32) -> RealInterval {
    let z2 = z.sqr();
    let mut power = z.clone();
    let mut sum = RealInterval::zero(w);
    let mut j: i64 = 0;
    loop {
        sum = &sum + &power.div(&RealInterval::from_int(2 * j + 1, w)).unwrap();
        power = &power * &z2;
        j += 1;
        let mag = power.abs();
        if mag.hi() < &ulp(w + 2) {
            let tail = mag.hi().mul(&Dyadic::from_f64(1.125));
            return sum.inflate(&tail);
        }
    }
}

pub fn ln2(prec: u32) -> RealInterval {
    cached(1, prec, || {
        let w = prec + GUARD;
        atanh_small(&RealInterval::from_ratio(1, 3, w), w).shl(1).with_prec(prec)
    })
}

fn exp_point(x: &Dyadic, prec: u32) -> RealInterval {
    if x.is_zero() {
        return RealInterval::one(prec);
    }
    let s = (x.magnitude() + 1).max(0);
    let w = prec + GUARD + s as u32;
    let y = RealInterval::point(x.shl(-s), w);
    let ymag = y.abs();
    let mut sum = RealInterval::one(w);
    let mut term = RealInterval::one(w);
    let mut k: i64 = 1;
    loop {
        term = (&term * &y).div(&RealInterval::from_int(k, w)).unwrap();
        sum = &sum + &term;
        k += 1;
        let next = (&term.abs() * &ymag).div(&RealInterval::from_int(k, w)).unwrap();
        if next.hi() < &ulp(w + 2) {
            // Lagrange tail: e^|y| * |y|^(k)/k! <= 2 * next for |y| <= 1/2.
            sum = sum.inflate(&next.hi().shl(1));
            break;
        }
    }
    for _ in 0..s {
        sum = sum.sqr();
    }
    sum.with_prec(prec)
}

pub fn exp(x: &RealInterval) -> RealInterval {
    let p = x.prec();
    if x.is_exact() {
        return exp_point(x.lo(), p);
    }
    let lo = exp_point(x.lo(), p);
    let hi = exp_point(x.hi(), p);
    RealInterval::new(lo.lo().clone(), hi.hi().clone(), p)
}

fn log_point(x: &Dyadic, prec: u32) -> RealInterval {
    debug_assert!(x.is_positive());
    let k = x.magnitude();
    let kbits = 64 - (k.unsigned_abs()).leading_zeros();
    let w = prec + GUARD + kbits;
    let f = RealInterval::point(x.shl(-k), w);
    let one = RealInterval::one(w);
    let z = (&f - &one).div(&(&f + &one)).unwrap();
    let lf = atanh_small(&z, w).shl(1);
    let total = &lf + &ln2(w).scale_int(k);
    total.with_prec(prec)
}

pub fn log(x: &RealInterval) -> Result<RealInterval, NumError> {
    if !x.is_positive() {
        return Err(NumError::Domain("log of an interval that is not strictly positive".into()));
    }
    let p = x.prec();
    if x.is_exact() {
        return Ok(log_point(x.lo(), p));
    }
    let lo = log_point(x.lo(), p);
    let hi = log_point(x.hi(), p);
    Ok(RealInterval::new(lo.lo().clone(), hi.hi().clone(), p))
}

/// Reduce a point modulo 2*pi; returns an interval of magnitude about pi or less.
fn reduce_two_pi(m: &Dyadic, prec: u32) -> (RealInterval, u32) {
    let mag = m.magnitude().max(0) as u32;
    let w = prec + GUARD + mag;
    let approx = m.to_f64() / std::f64::consts::TAU;
    let k = if approx.is_finite() { approx.round() } else { 0.0 };
    let two_pi = pi(w).shl(1);
    let y = &RealInterval::point(m.clone(), w) - &two_pi.scale_int(k as i64);
    (y, w)
}

/// Taylor series of cos (`odd = false`) or sin (`odd = true`) on an interval,
/// Lagrange remainder `|Y|^(n)/n!`.
fn trig_series(y: &RealInterval, w: u32, odd: bool) -> RealInterval {
    let y2 = y.sqr();
    let ymag = y.abs();
    let mut term = if odd { y.clone() } else { RealInterval::one(w) };
    let mut sum = term.clone();
    let mut n: i64 = if odd { 1 } else { 0 };
    let mut j = 1;
    loop {
        let denom = RealInterval::from_int((n + 1) * (n + 2), w);
        term = (&term * &y2).div(&denom).unwrap();
        n += 2;
        if j % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
        j += 1;
        // |Y|^(n+2)/(n+2)! from the current |term| <= |Y|^n / n!.
        let next = (&term.abs() * &ymag.sqr()).div(&RealInterval::from_int((n + 1) * (n + 2), w)).unwrap();
        if next.hi() < &ulp(w + 2) && ymag.hi().to_f64() < (n + 1) as f64 {
            let tail = upper_power_over_factorial(&ymag, (n + 2) as u32, w);
            return sum.inflate(&tail);
        }
    }
}

fn upper_power_over_factorial(ymag: &RealInterval, n: u32, w: u32) -> Dyadic {
    let mut v = RealInterval::one(w);
    for i in 1..=n {
        v = (&v * ymag).div(&RealInterval::from_int(i as i64, w)).unwrap();
    }
    v.hi().clone()
}

fn cos_point(m: &Dyadic, prec: u32) -> RealInterval {
    let (y, w) = reduce_two_pi(m, prec);
    trig_series(&y, w, false).with_prec(prec)
}

fn sin_point(m: &Dyadic, prec: u32) -> RealInterval {
    let (y, w) = reduce_two_pi(m, prec);
    trig_series(&y, w, true).with_prec(prec)
}

fn clamp_unit(v: RealInterval) -> RealInterval {
    let p = v.prec();
    v.intersect(&RealInterval::new(Dyadic::from_int(-1), Dyadic::one(), p))
        .expect("trig enclosure disjoint from [-1, 1]")
}

/// Enclosure of cos over an interval via the midpoint value plus the
/// Lipschitz radius.
pub fn cos(x: &RealInterval) -> RealInterval {
    let p = x.prec();
    if x.width().to_f64() > 4.0 {
        return RealInterval::new(Dyadic::from_int(-1), Dyadic::one(), p);
    }
    if x.is_exact() {
        return clamp_unit(cos_point(x.lo(), p));
    }
    clamp_unit(cos_point(&x.mid(), p).inflate(&x.rad()))
}

pub fn sin(x: &RealInterval) -> RealInterval {
    let p = x.prec();
    if x.width().to_f64() > 4.0 {
        return RealInterval::new(Dyadic::from_int(-1), Dyadic::one(), p);
    }
    if x.is_exact() {
        return clamp_unit(sin_point(x.lo(), p));
    }
    clamp_unit(sin_point(&x.mid(), p).inflate(&x.rad()))
}

/// atan on an interval inside [-1, 1] via half-angle reductions and series.
fn atan_unit(y: &RealInterval, w: u32) -> RealInterval {
    let one = RealInterval::one(w);
    let mut y = y.clone();
    let mut doublings = 0i64;
    while y.abs().hi() > &Dyadic::from_f64(0.125) {
        let s = (&one + &y.sqr()).sqrt().unwrap();
        y = y.div(&(&one + &s)).unwrap();
        doublings += 1;
    }
    let y2 = y.sqr();
    let mut power = y.clone();
    let mut sum = RealInterval::zero(w);
    let mut j: i64 = 0;
    loop {
        let term = power.div(&RealInterval::from_int(2 * j + 1, w)).unwrap();
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        power = &power * &y2;
        j += 1;
        let mag = power.abs();
        if mag.hi() < &ulp(w + 2) {
            return sum.inflate(mag.hi()).shl(doublings);
        }
    }
}

fn atan_point(x: &Dyadic, prec: u32) -> RealInterval {
    let w = prec + GUARD;
    if x.abs() <= Dyadic::one() {
        return atan_unit(&RealInterval::point(x.clone(), w), w).with_prec(prec);
    }
    let inv = RealInterval::point(x.clone(), w).recip().unwrap();
    let half_pi = pi(w).shl(-1);
    let r = atan_unit(&inv, w);
    let v = if x.is_positive() { &half_pi - &r } else { -&half_pi - &r };
    v.with_prec(prec)
}

pub fn atan(x: &RealInterval) -> RealInterval {
    let p = x.prec();
    if x.is_exact() {
        return atan_point(x.lo(), p);
    }
    let lo = atan_point(x.lo(), p);
    let hi = atan_point(x.hi(), p);
    RealInterval::new(lo.lo().clone(), hi.hi().clone(), p)
}

/// Principal argument in (-pi, pi] of the box `re + i im`.
pub fn arg(re: &RealInterval, im: &RealInterval) -> Result<RealInterval, NumError> {
    let p = re.prec().max(im.prec());
    if re.is_positive() {
        return Ok(atan(&im.div(re)?));
    }
    let half_pi = pi(p).shl(-1);
    if im.is_positive() {
        return Ok(&half_pi - &atan(&re.div(im)?));
    }
    if im.is_negative() {
        return Ok(-&half_pi - &atan(&re.div(im)?));
    }
    Err(NumError::Domain("argument undefined or on the branch cut".into()))
}
