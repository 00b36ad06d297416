//! Floating-point oracles, independent of the certified code paths.
#![allow(dead_code)]

use std::ops::{Add, Div, Mul, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }
    pub fn powi(self, n: u32) -> Self {
        (0..n).fold(C64::new(1.0, 0.0), |acc, _| acc * self)
    }
}

impl Add for C64 {
    type Output = C64;
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
}
impl Sub for C64 {
    type Output = C64;
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
}
impl Mul for C64 {
    type Output = C64;
    fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}
impl Div for C64 {
    type Output = C64;
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)
    }
}

/// `p(z)` and `p'(z)` for real coefficients, constant term first.
fn eval_with_derivative(coeffs: &[f64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + C64::new(c, 0.0);
    }
    (p, dp)
}

/// All complex roots by Aberth iteration.
pub fn aberth_roots(coeffs: &[f64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    // Fujiwara bound
    let bound = (1..=n).map(|k| monic[n - k].abs().powf(1.0 / k as f64)).fold(0.0f64, f64::max) * 2.0;
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            C64::new(0.5 * bound * a.cos(), 0.5 * bound * a.sin())
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(&monic, z[i]);
            let ratio = p / dp;
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s = s + C64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (C64::new(1.0, 0.0) - ratio * s);
            z[i] = z[i] - w;
            moved = moved.max(w.abs());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// `Q_n` coefficients in floating point, straight from the binomial expansion
/// of `1 + z^n + (-1-z)^n` divided by the trivial factor.
pub fn q_float(n: u32) -> Vec<f64> {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut p: Vec<f64> = (0..=n).map(|k| sign * binom(n, k)).collect();
    p[0] += 1.0;
    p[n as usize] += 1.0;
    while p.last() == Some(&0.0) {
        p.pop();
    }
    let w = [1.0, 1.0, 1.0];
    let z = [0.0, 1.0, 1.0];
    let divisors: Vec<&[f64]> = match n % 6 {
        0 => vec![],
        1 => vec![&z, &w, &w],
        2 => vec![&w],
        3 => vec![&z],
        4 => vec![&w, &w],
        _ => vec![&z, &w],
    };
    for d in divisors {
        p = divide(&p, d);
    }
    p
}

fn divide(p: &[f64], d: &[f64]) -> Vec<f64> {
    // z(z+1) has a zero constant term: strip z first
    let (p, d): (Vec<f64>, Vec<f64>) =
        if d[0] == 0.0 { (p[1..].to_vec(), d[1..].to_vec()) } else { (p.to_vec(), d.to_vec()) };
    let mut rem = p.clone();
    let dd = d.len() - 1;
    let mut q = vec![0.0; p.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / d[dd];
        q[i] = c;
        for j in 0..=dd {
            rem[i + j] -= c * d[j];
        }
    }
    q
}

pub fn binom(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Largest root modulus of `Q_n` by Aberth.
pub fn max_modulus_float(n: u32) -> f64 {
    aberth_roots(&q_float(n)).iter().map(|z| z.abs()).fold(0.0, f64::max)
}

/// Roots of `Q_n` on `Re z = -1/2` with `Im z > sqrt(3)/2`, as `t` values, sorted.
pub fn segment_ts_float(n: u32) -> Vec<f64> {
    let mut ts: Vec<f64> = aberth_roots(&q_float(n))
        .into_iter()
        .filter(|z| (z.re + 0.5).abs() < 1e-6 && z.im > 0.8661)
        .map(|z| z.im)
        .collect();
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts
}

/// Complex fixed point with `FIX_BITS` fractional bits, for polishing roots
/// past double precision.
pub const FIX_BITS: u32 = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct FixC {
    pub re: num_bigint::BigInt,
    pub im: num_bigint::BigInt,
}

impl FixC {
    pub fn from_c64(z: C64) -> Self {
        let s = |v: f64| num_bigint::BigInt::from((v * 2f64.powi(60)).round() as i64) << (FIX_BITS - 60);
        FixC { re: s(z.re), im: s(z.im) }
    }

    fn int(c: &num_bigint::BigInt) -> Self {
        FixC { re: c << FIX_BITS, im: 0.into() }
    }

    fn add(&self, o: &FixC) -> FixC {
        FixC { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &FixC) -> FixC {
        FixC { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &FixC) -> FixC {
        FixC {
            re: (&self.re * &o.re - &self.im * &o.im) >> FIX_BITS,
            im: (&self.re * &o.im + &self.im * &o.re) >> FIX_BITS,
        }
    }

    fn div(&self, o: &FixC) -> FixC {
        let d = (&o.re * &o.re + &o.im * &o.im) >> FIX_BITS;
        FixC {
            re: ((&self.re * &o.re + &self.im * &o.im) >> FIX_BITS << FIX_BITS) / &d,
            im: ((&self.im * &o.re - &self.re * &o.im) >> FIX_BITS << FIX_BITS) / &d,
        }
    }

    /// `log2 |self|`, roughly.
    pub fn log2_abs(&self) -> f64 {
        let bits = self.re.bits().max(self.im.bits()) as f64;
        bits - FIX_BITS as f64
    }
}

/// All roots of an integer polynomial (constant term first) to roughly
/// `FIX_BITS` bits: double-precision Aberth for seeds, then Aberth steps in
/// fixed point until every correction is below `2^-200`.
pub fn roots_fixed(coeffs: &[num_bigint::BigInt]) -> Vec<FixC> {
    let floats: Vec<f64> = coeffs.iter().map(|c| c.to_string().parse::<f64>().unwrap()).collect();
    let mut z: Vec<FixC> = aberth_roots(&floats).into_iter().map(FixC::from_c64).collect();
    let n = z.len();
    let one = FixC::int(&1.into());
    for _ in 0..400 {
        let mut worst = f64::NEG_INFINITY;
        for i in 0..n {
            let mut p = FixC::int(&0.into());
            let mut dp = p.clone();
            for c in coeffs.iter().rev() {
                dp = dp.mul(&z[i]).add(&p);
                p = p.mul(&z[i]).add(&FixC::int(c));
            }
            if p.re.bits() == 0 && p.im.bits() == 0 {
                continue;
            }
            let ratio = p.div(&dp);
            let mut s = FixC::int(&0.into());
            for j in 0..n {
                if j != i {
                    s = s.add(&one.div(&z[i].sub(&z[j])));
                }
            }
            let w = ratio.div(&one.sub(&ratio.mul(&s)));
            worst = worst.max(w.log2_abs());
            z[i] = z[i].sub(&w);
        }
        if worst < -200.0 {
            break;
        }
    }
    z
}

pub fn fix_distance_log2(a: &FixC, b: &FixC) -> f64 {
    a.sub(b).log2_abs()
}
