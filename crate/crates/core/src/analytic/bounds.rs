//! Explicit inequalities, each evaluated as a `BoundReport` whose verdict
//! comes only from interval endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{verdict_le, verdict_lt, BoundReport, HeightBound, Value, Verdict};
use crate::error::AnalyticError;
use crate::exactnum::transcendental::{exp, log, pi};
use crate::exactnum::unity::signed_sum_is_zero;
use crate::exactnum::{ComplexBox, RealInterval, UnityRoot};
use crate::powersum::build_pq;

fn ri(n: i64, prec: u32) -> RealInterval {
    RealInterval::from_int(n, prec)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `x^k` for possibly huge `k`: repeated squaring below `2^20`, else
/// `exp(k log x)`.
pub(crate) fn pow_u64(x: &RealInterval, k: u64) -> Result<RealInterval, AnalyticError> {
    if k < (1 << 20) {
        Ok(x.pow(k as u32))
    } else {
        Ok(exp(&(&log(x)? * &RealInterval::from_int(k, x.prec()))))
    }
}

/// `(u - 3/4)^3 / (1/4 + u)^2` with `u = t^2`.
fn six_group(u: &RealInterval) -> Result<RealInterval, AnalyticError> {
    let p = u.prec();
    let num = (u - &RealInterval::from_ratio(3, 4, p)).pow(3);
    let den = (u + &RealInterval::from_ratio(1, 4, p)).sqr();
    Ok(num.div(&den)?)
}

/// Contribution of a group of six roots at `-1/2 + i t`; Satisfied when it
/// is certainly below `1/2`.
pub fn bound_14_9(t: &RealInterval) -> BoundReport {
    let u = t.sqr();
    report_14_9(&u).with("t", Value::Interval(t.clone()))
}

/// Same bound with the root given by its modulus `r` (`t^2 = r^2 - 1/4`).
pub fn bound_14_9_at_modulus(r: &RealInterval) -> BoundReport {
    let u = &r.sqr() - &RealInterval::from_ratio(1, 4, r.prec());
    report_14_9(&u).with("r", Value::Interval(r.clone()))
}

fn report_14_9(u: &RealInterval) -> BoundReport {
    let p = u.prec();
    match six_group(u) {
        Ok(v) => {
            let verdict = verdict_lt(&v, &RealInterval::from_ratio(1, 2, p));
            BoundReport::new("bound_14_9", v, verdict)
        }
        Err(e) => BoundReport::new("bound_14_9", RealInterval::zero(p), Verdict::Undecided).with_note(e.to_string()),
    }
}

/// `pi r^b / 2` with `r` a lower bound for the maximal modulus of a nonempty
/// `Z(b, c)`: no nontrivial common zero of `(1, b, c)` exists for
/// `c <= floor(value)`. That modulus always exceeds `14/9`, so `r` is raised
/// to at least `14/9`. Undecided unless `1 - 1/r - 1/(r^b - 1) > 0` and
/// `r^b (1 - 1/r) > 2` certify.
pub fn c_small_threshold(r: &RealInterval, b: u64) -> BoundReport {
    let p = r.prec();
    let r_eff = r.max(&RealInterval::from_rational(&rat(14, 9), p));
    let rb = r_eff.pow(b as u32);
    let value = (&pi(p) * &rb).shl(-1);
    let one = RealInterval::one(p);
    let side = match (r_eff.recip(), (&rb - &one).recip()) {
        (Ok(ir), Ok(irb)) => {
            let s1 = &(&one - &ir) - &irb;
            let s2 = &rb * &(&one - &ir);
            s1.is_positive() && ri(2, p).certainly_lt(&s2)
        }
        _ => false,
    };
    let verdict = if side { Verdict::Satisfied } else { Verdict::Undecided };
    let c_lo = value.floor_lo();
    BoundReport::new("c_small_threshold", value, verdict)
        .with("r", Value::Interval(r.clone()))
        .with("b", Value::int(b))
        .with("c_lo", Value::Integer(c_lo.to_string()))
}

/// `exp(-(9/8)(22 pi + dh) max(34, d log(k/2) + 10)^2)`, a lower bound for
/// `|alpha^k - 1|` given degree `d` and `d h(alpha) <= dh`.
pub fn lmn_lower_dh(d: u64, dh: &RealInterval, k: u64) -> Result<RealInterval, AnalyticError> {
    if d == 0 || k == 0 {
        return Err(AnalyticError::Invalid("d and k must be positive".into()));
    }
    let p = dh.prec();
    let l = &(&log(&RealInterval::from_ratio(k as i64, 2, p))? * &ri(d as i64, p)) + &ri(10, p);
    let m = l.max(&ri(34, p));
    let a = &pi(p).scale_int(22) + dh;
    let e = &(&a * &m.sqr()) * &RealInterval::from_ratio(9, 8, p);
    Ok(exp(&-e))
}

pub fn lmn_lower(d: u64, h: &RealInterval, k: u64) -> Result<RealInterval, AnalyticError> {
    lmn_lower_dh(d, &(h * &ri(d as i64, h.prec())), k)
}

/// `d h(alpha) <= log 2 + (b/3) log r` for a root of `Q_b`, `d = deg Q_b`.
pub fn height_bound_a1(b: u32, r: &RealInterval) -> Result<HeightBound, AnalyticError> {
    let p = r.prec();
    let d = build_pq(b)?.q_degree() as u64;
    let dh = &log(&ri(2, p))? + &(&log(r)? * &RealInterval::from_ratio(b as i64, 3, p));
    Ok(HeightBound { d, dh })
}

/// `h(zeta) <= 2 log(2 r)` with `d = (ab)^2`.
pub fn height_bound_general(a: u64, b: u64, r: &RealInterval) -> Result<HeightBound, AnalyticError> {
    let p = r.prec();
    let d = (a * b).pow(2);
    let h = log(&r.shl(1))?.shl(1);
    Ok(HeightBound { d, dh: &h * &RealInterval::from_int(d, p) })
}

/// `320 b^2 + 2 b^3 / 3`.
pub fn lmn3_rhs(b: u64, prec: u32) -> RealInterval {
    let b = BigInt::from(b);
    let q = BigRational::from_integer(&b * &b * 320) + BigRational::new(&b * &b * &b * 2, 3.into());
    RealInterval::from_rational(&q, prec)
}

fn c_over_log2(c: &RealInterval) -> Result<RealInterval, AnalyticError> {
    Ok(c.div(&log(c)?.sqr())?)
}

/// Largest integer `c >= 149 (> e^5)` with `c / (log c)^2 <= rhs`, found by
/// bisection; the map is increasing beyond `e^2`. `None` when an
/// evaluation cannot be separated from `rhs` at `prec`.
pub fn c_bracket(rhs: &RealInterval, prec: u32) -> Result<Option<BigInt>, AnalyticError> {
    let f = |c: &BigInt| c_over_log2(&RealInterval::from_int(c.clone(), prec));
    let mut lo = BigInt::from(149);
    match verdict_le(&f(&lo)?, rhs) {
        Verdict::Satisfied => {}
        Verdict::Violated => return Err(AnalyticError::Invalid("rhs below 149/25".into())),
        Verdict::Undecided => return Ok(None),
    }
    let mut hi = &lo * 2;
    loop {
        match verdict_le(&f(&hi)?, rhs) {
            Verdict::Satisfied => {
                lo = hi.clone();
                hi *= 2;
            }
            Verdict::Violated => break,
            Verdict::Undecided => return Ok(None),
        }
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        match verdict_le(&f(&mid)?, rhs) {
            Verdict::Satisfied => lo = mid,
            Verdict::Violated => hi = mid,
            Verdict::Undecided => return Ok(None),
        }
    }
    Ok(Some(lo))
}

/// Largest `c` allowed by `c / (log c)^2 <= 320 b^2 + 2 b^3 / 3`.
pub fn lmn3_c_max(b: u64, prec: u32) -> Result<BoundReport, AnalyticError> {
    let rhs = lmn3_rhs(b, prec);
    let rep = match c_bracket(&rhs, prec)? {
        Some(c) => BoundReport::new("lmn3_c_max", RealInterval::from_int(c.clone(), prec), Verdict::Satisfied)
            .with("c_max", Value::Integer(c.to_string())),
        None => BoundReport::new("lmn3_c_max", rhs.clone(), Verdict::Undecided).with_note("bisection not separable"),
    };
    Ok(rep.with("b", Value::int(b)).with("rhs", Value::Interval(rhs)))
}

/// Evaluate `c / (log c)^2 <= 320 b^2 + 2 b^3 / 3` at the lower end of `c`.
/// Violated means every `c` in the enclosure contradicts the inequality.
pub fn lmn3_inequality(b: u64, c: &RealInterval) -> Result<BoundReport, AnalyticError> {
    let p = c.prec();
    let c_lo = RealInterval::point(c.lo().clone(), p);
    let v = c_over_log2(&c_lo)?;
    let rhs = lmn3_rhs(b, p);
    let verdict = verdict_le(&v, &rhs);
    let margin = &v - &rhs;
    Ok(BoundReport::new("lmn3_inequality", v, verdict)
        .with("b", Value::int(b))
        .with("c", Value::Interval(c.clone()))
        .with("rhs", Value::Interval(rhs))
        .with("margin", Value::Interval(margin)))
}

/// Given `r^c > 3`, `|zeta^c - 1| <= 2x/(1-x) <= 3x` with `x = r^-c`.
pub fn final_proof_1_check(r: &RealInterval, c: u64) -> Result<BoundReport, AnalyticError> {
    let p = r.prec();
    let rc = pow_u64(r, c)?;
    let base = BoundReport::new("final_proof_1", rc.clone(), Verdict::Undecided)
        .with("r", Value::Interval(r.clone()))
        .with("c", Value::int(c));
    if !ri(3, p).certainly_lt(&rc) {
        return Ok(base.with_note("r^c > 3 not certified"));
    }
    let x = rc.recip()?;
    let lhs = x.shl(1).div(&(&RealInterval::one(p) - &x))?;
    let rhs = x.scale_int(3);
    let verdict = verdict_le(&lhs, &rhs);
    Ok(BoundReport { value: lhs, verdict, ..base }.with("three_x", Value::Interval(rhs)))
}

/// Largest `c` with `c / (log c)^2 <= 3 (ab)^6 (1 + 1/log r)`.
pub fn final_proof_2_c_max(a: u64, b: u64, r: &RealInterval) -> Result<BoundReport, AnalyticError> {
    let p = r.prec();
    let lr = log(r)?;
    if !lr.is_positive() {
        return Err(AnalyticError::PreconditionUnverifiable("r > 1".into()));
    }
    let ab6 = RealInterval::from_int(BigInt::from(a * b).pow(6) * 3, p);
    let rhs = &ab6 * &(&RealInterval::one(p) + &lr.recip()?);
    let rep = match c_bracket(&rhs, p)? {
        Some(c) => BoundReport::new("final_proof_2_c_max", RealInterval::from_int(c.clone(), p), Verdict::Satisfied)
            .with("c_max", Value::Integer(c.to_string())),
        None => BoundReport::new("final_proof_2_c_max", rhs.clone(), Verdict::Undecided),
    };
    Ok(rep
        .with("a", Value::int(a))
        .with("b", Value::int(b))
        .with("r", Value::Interval(r.clone()))
        .with("rhs", Value::Interval(rhs)))
}

/// `2 b^8 <= r^b` excludes roots of unity. Value is `r^b`.
pub fn root_of_unity_exclusion(b: u64, r: &RealInterval) -> Result<BoundReport, AnalyticError> {
    let p = r.prec();
    let rb = pow_u64(r, b)?;
    let lhs = RealInterval::from_int(BigInt::from(b).pow(8) * 2, p);
    let verdict = verdict_le(&lhs, &rb);
    Ok(BoundReport::new("root_of_unity_exclusion", rb, verdict)
        .with("b", Value::int(b))
        .with("r", Value::Interval(r.clone()))
        .with("two_b8", Value::Interval(lhs)))
}

/// Whether exactly one exponent of the pair is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityProfile {
    ExactlyOneEven,
    Other,
}

impl ParityProfile {
    pub fn of(a: u64, b: u64) -> Self {
        if (a + b) % 2 == 1 {
            ParityProfile::ExactlyOneEven
        } else {
            ParityProfile::Other
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralBounds {
    pub a: u64,
    pub profile: ParityProfile,
    /// Every common zero has `b` below this.
    pub b_bound: u128,
    /// Lower bound for the maximal root modulus.
    pub r_lower: RealInterval,
    pub reports: Vec<BoundReport>,
}

/// Bounds for `a >= 2`: the range of `b`, a lower bound for `r` and, when
/// `b` is given, the `c` range, height bound and root-of-unity test at that
/// lower bound for `r`.
pub fn general_bounds(
    a: u64,
    profile: ParityProfile,
    b: Option<u64>,
    prec: u32,
) -> Result<GeneralBounds, AnalyticError> {
    if a < 2 {
        return Err(AnalyticError::Invalid(format!("need a >= 2, got {a}")));
    }
    if a > 60 {
        return Err(AnalyticError::Invalid(format!("a = {a} too large")));
    }
    let a2 = (a * a) as u128 * 600;
    let (b_bound, r_den) = match profile {
        ParityProfile::ExactlyOneEven => (a2, BigInt::from(10 * a)),
        ParityProfile::Other => (a2 << a, BigInt::from(10 * a) << a as usize),
    };
    let r_lower = exp(&RealInterval::from_rational(&BigRational::new(BigInt::one(), r_den.clone()), prec));
    let mut reports = Vec::new();
    let bb = RealInterval::from_int(b_bound, prec);
    let mut brep = BoundReport::new("b_bound", bb.clone(), Verdict::Satisfied).with("a", Value::int(a));
    if let Some(b) = b {
        brep = brep.with("b", Value::int(b));
        if b as u128 >= b_bound {
            brep.verdict = Verdict::Violated;
            brep = brep.with_note("b outside the range that admits common zeros");
        }
    }
    reports.push(brep);
    reports.push(
        BoundReport::new("r_lower", r_lower.clone(), Verdict::Satisfied)
            .with("exponent", Value::rational(&BigRational::new(BigInt::one(), r_den))),
    );
    if let Some(b) = b {
        reports.push(final_proof_2_c_max(a, b, &r_lower)?);
        reports.push(root_of_unity_exclusion(b, &r_lower)?);
        let h = height_bound_general(a, b, &r_lower)?;
        reports.push(
            BoundReport::new("height_bound", h.dh.clone(), Verdict::Satisfied)
                .with("d", Value::int(h.d))
                .with("r", Value::Interval(r_lower.clone())),
        );
    }
    Ok(GeneralBounds { a, profile, b_bound, r_lower, reports })
}

fn ten_delta_report(w: &ComplexBox, delta: &RealInterval) -> Result<BoundReport, AnalyticError> {
    let p = w.prec().max(delta.prec());
    let one = ComplexBox::real(RealInterval::one(p));
    let v = &(&(w * w) + w) + &one;
    let value = v.abs();
    let ten = delta.scale_int(10);
    let verdict = verdict_le(&value, &ten);
    Ok(BoundReport::new("ten_delta", value, verdict).with("delta", Value::Interval(delta.clone())))
}

/// `|w^2 + w + 1| <= 10 delta` when `|w|` and `|1 + w|` lie in
/// `[e^-delta, e^delta]` and `delta <= 1/10`.
pub fn ten_delta_check(w: &ComplexBox, delta: &RealInterval) -> Result<BoundReport, AnalyticError> {
    let p = w.prec().max(delta.prec());
    if !delta.certainly_le(&RealInterval::from_ratio(1, 10, p)) || delta.is_negative() {
        return Err(AnalyticError::PreconditionUnverifiable("0 <= delta <= 1/10".into()));
    }
    let lo = exp(&-delta);
    let hi = exp(delta);
    let one = ComplexBox::real(RealInterval::one(p));
    for (label, m) in [("|w|", w.abs()), ("|1+w|", (&one + w).abs())] {
        if !(lo.certainly_le(&m) && m.certainly_le(&hi)) {
            return Err(AnalyticError::PreconditionUnverifiable(format!("e^-delta <= {label} <= e^delta")));
        }
    }
    Ok(ten_delta_report(w, delta)?
        .with("w_re", Value::Interval(w.re.clone()))
        .with("w_im", Value::Interval(w.im.clone())))
}

/// Exact variant for a root of unity: `|w| = 1` always, and `|1 + w| = 1`
/// exactly when `w + 1/w + 1 = 0`.
pub fn ten_delta_check_unity(w: UnityRoot, delta: &BigRational, prec: u32) -> Result<BoundReport, AnalyticError> {
    if delta.is_negative() || *delta > rat(1, 10) {
        return Err(AnalyticError::PreconditionUnverifiable("0 <= delta <= 1/10".into()));
    }
    let on_both = signed_sum_is_zero(&[(1, w), (1, w.inv()), (1, UnityRoot::one())]);
    if delta.is_zero() {
        if !on_both {
            return Err(AnalyticError::PreconditionUnverifiable("|1+w| = 1".into()));
        }
        // w^2 + w + 1 = w (w + 1/w + 1) = 0
        return Ok(BoundReport::new("ten_delta", RealInterval::zero(prec), Verdict::Satisfied)
            .with("w", Value::Text(w.to_string()))
            .with("delta", Value::rational(delta)));
    }
    let d = RealInterval::from_rational(delta, prec);
    Ok(ten_delta_check(&w.to_complex(prec), &d)?.with("w", Value::Text(w.to_string())))
}
