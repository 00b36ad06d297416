//! Roots of `Q_n` on the half-line `z = -1/2 + i t`, `t > sqrt(3)/2`.
//!
//! `Q_n(-1/2 + w)` is even in `w`, so with `u = t^2` the restriction is a
//! real polynomial `q_u(u)` with integer coefficients (after clearing the
//! powers of two). Roots are bracketed by exact sign evaluation at rational
//! points near `u = tan^2(k pi / n) / 4`, the grid where `cos(n theta) = ±1`,
//! and refined by exact bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AnalyticError;
use crate::exactnum::transcendental::{cos, pi};
use crate::exactnum::{ComplexBox, Dyadic, PrecisionPolicy, RealInterval, Round};
use crate::powersum::build_pq;
use crate::unipoly::{IntPoly, RatPoly};

/// `Q_n` restricted to the line `Re z = -1/2`, as a polynomial in `u = t^2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentPoly {
    pub n: u32,
    pub q_degree: usize,
    /// Positive multiple of `Q_n(-1/2 + i sqrt(u))`.
    pub qu: IntPoly,
    /// Sign of `C_n` on the open segment.
    pub c_sign: i32,
}

pub fn segment_polynomial(n: u32) -> Result<SegmentPoly, AnalyticError> {
    let d = build_pq(n)?;
    let q = d.q.to_rat();
    let shift = RatPoly::new(vec![BigRational::new((-1).into(), 2.into()), BigRational::one()], ());
    let inw = q.compose(&shift);
    let mut coeffs = Vec::new();
    for (j, c) in inw.coeffs().iter().enumerate() {
        if j % 2 == 1 {
            if !c.is_zero() {
                return Err(AnalyticError::Invalid(format!("Q_{n}(-1/2 + w) is not even in w")));
            }
            continue;
        }
        // w^2 = -u
        coeffs.push(if (j / 2) % 2 == 0 { c.clone() } else { -c.clone() });
    }
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let qu = IntPoly::new(coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect());
    // z(z+1) = -1/4 - t^2 and z^2 + z + 1 = 3/4 - t^2 are both negative on the segment
    let c_sign = match n % 6 {
        0 | 4 | 5 => 1,
        _ => -1,
    };
    Ok(SegmentPoly { n, q_degree: d.q.deg(), qu, c_sign })
}

/// Exact sign of `p` at a dyadic point.
fn sign_at(p: &IntPoly, x: &Dyadic) -> i32 {
    let e = x.exponent();
    let v = if e >= 0 {
        p.eval(&(x.mantissa() << (e as usize)))
    } else {
        // scale by 2^(-e * deg) to stay integral
        let k = (-e) as usize;
        let num = x.mantissa();
        let d = p.deg();
        let mut acc = p.lc();
        for (j, c) in p.coeffs().iter().rev().skip(1).enumerate() {
            acc = acc * num + (c << (k * (j + 1)));
        }
        let _ = d;
        acc
    };
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// One root `-1/2 + i t` of `Q_n` with `t > sqrt(3)/2` and its orbit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentRoot {
    pub n: u32,
    /// Exact dyadic bracket of `u = t^2`, with `q_u` of opposite signs at
    /// the endpoints (or a single exact root).
    pub u: RealInterval,
    pub t: RealInterval,
    /// `alpha, conj(alpha), conj(alpha)/alpha, alpha/conj(alpha), 1/alpha, 1/conj(alpha)`.
    pub orbit: Vec<ComplexBox>,
    pub qu: IntPoly,
}

fn exact_interval(lo: &Dyadic, hi: &Dyadic) -> RealInterval {
    let bits = lo.bits().max(hi.bits()) as u32 + 2;
    RealInterval::new(lo.clone(), hi.clone(), bits)
}

fn bits_for_width(width: &BigRational) -> u32 {
    // smallest k with 2^-k <= width
    let mut k = 0u32;
    let mut p = BigRational::one();
    while p > *width {
        p /= BigRational::from_integer(2.into());
        k += 1;
    }
    k
}

impl SegmentRoot {
    fn build(n: u32, qu: IntPoly, lo: Dyadic, hi: Dyadic, prec: u32) -> SegmentRoot {
        let u = exact_interval(&lo, &hi);
        let uprec = RealInterval::new(lo, hi, prec);
        let t = uprec.sqrt().expect("u > 3/4");
        let alpha = ComplexBox::new(RealInterval::from_ratio(-1, 2, prec), t.clone());
        let conj = alpha.conj();
        let orbit = vec![
            alpha.clone(),
            conj.clone(),
            conj.div(&alpha).expect("alpha != 0"),
            alpha.div(&conj).expect("alpha != 0"),
            alpha.recip().expect("alpha != 0"),
            conj.recip().expect("alpha != 0"),
        ];
        SegmentRoot { n, u, t, orbit, qu }
    }

    pub fn alpha(&self) -> &ComplexBox {
        &self.orbit[0]
    }

    /// Bisect until the bracket of `u` (and hence of `t`) is narrower than
    /// `width`; boxes are recomputed at a matching precision.
    pub fn refine(&self, width: &BigRational) -> SegmentRoot {
        let (mut lo, mut hi) = (self.u.lo().clone(), self.u.hi().clone());
        let w = Dyadic::from_rational(width, 64, Round::Down);
        let slo = sign_at(&self.qu, &lo);
        while hi.sub(&lo) > w {
            let mid = lo.add(&hi).shl(-1);
            let s = sign_at(&self.qu, &mid);
            if s == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let prec = bits_for_width(width) + 32;
        SegmentRoot::build(self.n, self.qu.clone(), lo, hi, prec)
    }

    /// `|alpha| = sqrt(1/4 + t^2)`.
    pub fn modulus(&self) -> RealInterval {
        let p = self.t.prec();
        let u = self.u.with_prec(p);
        (&u + &RealInterval::from_ratio(1, 4, p)).sqrt().expect("positive")
    }
}

/// The sign grid: `(k, s(theta_k))` with `s = 2 cos(n theta) + (2|cos theta|)^n`
/// at `theta_k = k pi / n`, `n/2 < k < 2n/3`, and the matching `u_k`.
fn grid(n: u32, prec: u32) -> Vec<(u32, RealInterval, RealInterval)> {
    let mut out = Vec::new();
    let p = pi(prec);
    for k in (n / 2 + 1)..=((2 * n).saturating_sub(1) / 3) {
        if 2 * k <= n || 3 * k >= 2 * n {
            continue;
        }
        let theta = p.scale_int(k as i64).div(&RealInterval::from_int(n, prec)).expect("n > 0");
        let c = cos(&theta);
        let sign = if k % 2 == 0 { 2 } else { -2 };
        let s = &RealInterval::from_int(sign, prec) + &c.abs().shl(1).pow(n);
        let c2 = c.sqr();
        let u = (&RealInterval::one(prec) - &c2).div(&c2.shl(2)).expect("cos theta != 0 on the grid");
        out.push((k, s, u));
    }
    out
}

/// Power of two above every positive root of `p` (Cauchy bound).
fn root_upper_bound(p: &IntPoly) -> Dyadic {
    let lc = p.lc().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let ratio: BigInt = m / &lc + 2;
    Dyadic::one().shl(ratio.bits() as i64)
}

pub fn isolate_segment_roots(n: u32, width: &BigRational) -> Result<Vec<SegmentRoot>, AnalyticError> {
    isolate_segment_roots_with(n, width, PrecisionPolicy::from_env().cap)
}

/// Isolate all segment roots of `Q_n` to `t`-width below `width`. Fails with
/// `CountMismatch` unless exactly `deg Q_n / 6` brackets are found.
pub fn isolate_segment_roots_with(n: u32, width: &BigRational, cap: u32) -> Result<Vec<SegmentRoot>, AnalyticError> {
    if n < 2 {
        return Err(AnalyticError::Invalid(format!("n must be at least 2, got {n}")));
    }
    if !width.is_positive() {
        return Err(AnalyticError::Invalid("width must be positive".into()));
    }
    if bits_for_width(width) > cap {
        return Err(AnalyticError::WidthUnreachable(cap));
    }
    let sp = segment_polynomial(n)?;
    if sp.q_degree == 0 {
        return Ok(Vec::new());
    }
    let expected = sp.q_degree / 6;
    let prec = 128;
    const K: i64 = 96;
    // (point, exact sign); the first point is u = 3/4 (z = omega)
    let mut pts: Vec<(Dyadic, i32)> = Vec::new();
    let three_quarters = Dyadic::new(3.into(), -2);
    pts.push((three_quarters.clone(), sign_at(&sp.qu, &three_quarters)));
    let mut g = grid(n, prec);
    g.sort_by_key(|a| a.2.mid());
    for (k, s, u) in g {
        let mut x = Dyadic::new(u.mid().shl(K).floor_int(), -K);
        let mut sx = sign_at(&sp.qu, &x);
        while sx == 0 {
            x = x.add(&Dyadic::new(1.into(), -K));
            sx = sign_at(&sp.qu, &x);
        }
        if x <= pts.last().expect("nonempty").0 {
            return Err(AnalyticError::Invalid(format!("grid points out of order at k={k}")));
        }
        let s_sign = if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        };
        if s_sign != 0 && s_sign * sp.c_sign != sx {
            return Err(AnalyticError::Invalid(format!(
                "sign grid disagrees with exact evaluation at k={k} for n={n}"
            )));
        }
        pts.push((x, sx));
    }
    let top = root_upper_bound(&sp.qu).max(pts.last().expect("nonempty").0.shl(1));
    pts.push((top.clone(), sign_at(&sp.qu, &top)));
    if pts[0].1 == 0 || pts.last().expect("nonempty").1 == 0 {
        return Err(AnalyticError::Invalid(format!("segment endpoint is a root for n={n}")));
    }
    let brackets: Vec<(Dyadic, Dyadic)> =
        pts.windows(2).filter(|w| w[0].1 != w[1].1).map(|w| (w[0].0.clone(), w[1].0.clone())).collect();
    if brackets.len() != expected {
        return Err(AnalyticError::CountMismatch { n, found: brackets.len(), expected });
    }
    let prec = bits_for_width(width) + 32;
    Ok(brackets.into_iter().map(|(lo, hi)| SegmentRoot::build(n, sp.qu.clone(), lo, hi, prec).refine(width)).collect())
}

/// Enclosure of the largest modulus of a root of `Q_n`. The other members of
/// each orbit have modulus at most 1, so the maximum is `|alpha|` for the
/// segment root with the largest `t`.
pub fn max_modulus(n: u32, width: &BigRational) -> Result<RealInterval, AnalyticError> {
    let roots = isolate_segment_roots(n, width)?;
    let top = roots.last().ok_or_else(|| AnalyticError::Invalid(format!("Q_{n} has no roots")))?;
    let r = top.modulus();
    if !RealInterval::one(r.prec()).certainly_lt(&r) {
        return Err(AnalyticError::PreconditionUnverifiable("|alpha| > 1".into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: i32) -> BigRational {
        BigRational::new(1.into(), BigInt::from(10).pow(e as u32))
    }

    #[test]
    fn n8_root() {
        let r = isolate_segment_roots(8, &w(12)).unwrap();
        assert_eq!(r.len(), 1);
        let t = &r[0].t;
        assert!((t.mid_f64() - 2.513228157188).abs() < 1e-9, "{t:?}");
        let m = max_modulus(8, &w(12)).unwrap();
        assert!(m.lo_f64() > 2.5624 && m.hi_f64() < 2.5626);
    }

    #[test]
    fn degenerate_and_multiple() {
        assert!(isolate_segment_roots(7, &w(6)).unwrap().is_empty());
        let r = isolate_segment_roots(12, &w(6)).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[1].modulus().lo_f64() >= 3.83);
    }

    #[test]
    fn dyadic_signs() {
        let p = IntPoly::from_i64s(&[-3, 0, 4]); // 4u^2 - 3
        assert_eq!(sign_at(&p, &Dyadic::new(3.into(), -2)), -1);
        assert_eq!(sign_at(&p, &Dyadic::one()), 1);
        assert_eq!(sign_at(&IntPoly::from_i64s(&[-1, 4]), &Dyadic::new(1.into(), -2)), 0);
    }
}
