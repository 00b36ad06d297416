//! Exact roots of unity and exact vanishing tests for their sums.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::complex::ComplexBox;
use super::interval::RealInterval;
use super::transcendental as tr;

/// `e^{2 pi i j / k}` with `gcd(j, k) = 1` and `0 <= j < k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnityRoot {
    order: u64,
    exponent: u64,
}

impl UnityRoot {
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "order must be positive");
        let j = exponent.rem_euclid(order as i64) as u64;
        let g = j.gcd(&order);
        if j == 0 {
            return UnityRoot { order: 1, exponent: 0 };
        }
        UnityRoot { order: order / g, exponent: j / g }
    }

    pub fn one() -> Self {
        UnityRoot { order: 1, exponent: 0 }
    }

    pub fn minus_one() -> Self {
        UnityRoot { order: 2, exponent: 1 }
    }

    /// Primitive cube root `e^{2 pi i / 3}`.
    pub fn omega() -> Self {
        UnityRoot { order: 3, exponent: 1 }
    }

    pub fn order(self) -> u64 {
        self.order
    }

    pub fn exponent(self) -> u64 {
        self.exponent
    }

    pub fn is_one(self) -> bool {
        self.order == 1
    }

    pub fn mul(self, o: UnityRoot) -> UnityRoot {
        let k = self.order.lcm(&o.order);
        let j = self.exponent * (k / self.order) + o.exponent * (k / o.order);
        UnityRoot::new(k, (j % k) as i64)
    }

    pub fn pow(self, e: u64) -> UnityRoot {
        let j = (self.exponent as u128 * e as u128 % self.order as u128) as i64;
        UnityRoot::new(self.order, j)
    }

    pub fn inv(self) -> UnityRoot {
        UnityRoot::new(self.order, -(self.exponent as i64))
    }

    pub fn to_complex(self, prec: u32) -> ComplexBox {
        let angle = tr::pi(prec).scale_int(2 * self.exponent as i64).div(&RealInterval::from_int(self.order, prec));
        let angle = angle.expect("order is positive");
        ComplexBox::new(tr::cos(&angle), tr::sin(&angle))
    }
}

impl fmt::Debug for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta_{}^{}", self.order, self.exponent)
    }
}

impl fmt::Display for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (k, j) => write!(f, "e^(2pi i*{j}/{k})"),
        }
    }
}

/// Decide exactly whether `sum_i terms[i]` vanishes, by reducing
/// `sum x^{e_i}` modulo the cyclotomic polynomial of the common order.
pub fn sum_is_zero(terms: &[UnityRoot]) -> bool {
    if terms.is_empty() {
        return true;
    }
    let k = terms.iter().fold(1u64, |acc, t| acc.lcm(&t.order)) as usize;
    let mut v = vec![0i64; k];
    for t in terms {
        v[(t.exponent as usize) * (k / t.order as usize)] += 1;
    }
    let phi = cyclotomic(k as u64);
    reduce_monic(&mut v, &phi);
    v.iter().all(|&c| c == 0)
}

/// Signed sum: `sum_i signs[i] * terms[i] == 0`.
pub fn signed_sum_is_zero(terms: &[(i64, UnityRoot)]) -> bool {
    let k = terms.iter().fold(1u64, |acc, (_, t)| acc.lcm(&t.order)) as usize;
    let mut v = vec![0i64; k];
    for (s, t) in terms {
        v[(t.exponent as usize) * (k / t.order as usize)] += s;
    }
    let phi = cyclotomic(k as u64);
    reduce_monic(&mut v, &phi);
    v.iter().all(|&c| c == 0)
}

fn reduce_monic(v: &mut Vec<i64>, m: &[i64]) {
    let dm = m.len() - 1;
    while v.len() > dm {
        let top = v.pop().expect("nonempty");
        if top != 0 {
            let shift = v.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                v[shift + i] -= top * c;
            }
        }
    }
}

/// Coefficients (constant first) of the k-th cyclotomic polynomial.
pub fn cyclotomic(k: u64) -> Vec<i64> {
    // Phi_k = prod_{d | k} (x^d - 1)^{mu(k/d)}: multiply numerators, then divide.
    let divisors: Vec<u64> = (1..=k).filter(|d| k.is_multiple_of(*d)).collect();
    let mut num = vec![1i64];
    let mut dens = Vec::new();
    for &d in &divisors {
        match mobius(k / d) {
            1 => num = mul_binomial(&num, d as usize),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        num = div_binomial(&num, d);
    }
    num
}

fn mul_binomial(p: &[i64], d: usize) -> Vec<i64> {
    // p * (x^d - 1)
    let mut out = vec![0i64; p.len() + d];
    for (i, &c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_binomial(p: &[i64], d: usize) -> Vec<i64> {
    // exact division by (x^d - 1), from the top down
    let n = p.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![0i64; n + 1 - d];
    for i in (d..=n).rev() {
        let c = rem[i];
        q[i - d] = c;
        rem[i] = 0;
        rem[i - d] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

pub fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_products() {
        let i = UnityRoot::new(4, 1);
        assert_eq!(i.pow(2), UnityRoot::new(2, 1));
        assert_eq!(i.mul(i).mul(i).mul(i), UnityRoot::one());
        assert_eq!(UnityRoot::new(6, 4), UnityRoot::new(3, 2));
        assert_eq!(UnityRoot::new(5, -1).exponent(), 4);
    }

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic(105).contains(&-2));
    }

    #[test]
    fn vanishing_sums() {
        let w = UnityRoot::omega();
        assert!(sum_is_zero(&[w, w.pow(2), UnityRoot::one()]));
        let m = UnityRoot::minus_one();
        assert!(sum_is_zero(&[m, UnityRoot::one(), m, UnityRoot::one()]));
        assert!(!sum_is_zero(&[w, UnityRoot::one()]));
        assert!(!sum_is_zero(&[UnityRoot::new(5, 1), UnityRoot::new(5, 4), UnityRoot::one()]));
        assert!(signed_sum_is_zero(&[(1, w), (-1, w)]));
    }
}
