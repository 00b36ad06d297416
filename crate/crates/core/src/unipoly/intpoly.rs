//! Dense polynomials over the integers: content, pseudo-division,
//! primitive PRS gcd and subresultant resultants.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dense::{render_terms, FpPoly, RatPoly};
use crate::exactnum::fp::primes_above;
use crate::exactnum::PrimeFieldElem;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect(), ())
    }

    /// Clear denominators: returns the primitive integer polynomial with the
    /// same roots (positive leading coefficient).
    pub fn from_rat_primitive(f: &RatPoly) -> IntPoly {
        let l = f.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(f.coeffs().iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
            .primitive_part()
    }

    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        let pb = BigInt::from(p);
        FpPoly::new(
            self.coeffs
                .iter()
                .map(|c| PrimeFieldElem::from_reduced(c.mod_floor(&pb).to_u64().expect("reduced"), p))
                .collect(),
            p,
        )
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return self.clone();
        }
        let dd = d.deg();
        let l = d.lc();
        let mut r = self.coeffs.clone();
        let mut e = self.deg() - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            for c in r.iter_mut() {
                *c *= &l;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &top * dc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            e -= 1;
        }
        let mut out = IntPoly::new(r);
        if e > 0 {
            out = out.scale(&num_traits::pow(l, e));
        }
        out
    }

    /// Exact quotient in `Z[x]`, `None` if `d` does not divide `self` there.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let dd = d.deg();
        let l = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len() - dd];
        for i in (0..q.len()).rev() {
            let (c, rem) = r[i + dd].div_rem(&l);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| IntPoly::new(q))
    }

    /// Gcd in `Z[x]` with positive leading coefficient: gcd of contents
    /// times the primitive gcd. A single good prime with coprime images
    /// settles the coprime case; otherwise a primitive remainder sequence.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return o.primitive_part().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&o.content());
        let a = self.primitive_part();
        let b = o.primitive_part();
        if a.is_constant() || b.is_constant() || coprime_mod_p(&a, &b) {
            return IntPoly::constant(c);
        }
        let (mut a, mut b) = if a.deg() >= b.deg() { (a, b) } else { (b, a) };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Sylvester resultant by the subresultant algorithm.
    pub fn resultant(&self, o: &IntPoly) -> BigInt {
        if self.is_zero() || o.is_zero() {
            return BigInt::zero();
        }
        let (mut a, mut b, mut s) = if self.deg() < o.deg() {
            let sign = if self.deg() * o.deg() % 2 == 1 { -1 } else { 1 };
            (o.clone(), self.clone(), sign)
        } else {
            (self.clone(), o.clone(), 1)
        };
        if b.deg() == 0 {
            return s * num_traits::pow(b.lc(), a.deg());
        }
        let ca = a.content();
        let cb = b.content();
        a = IntPoly { coeffs: a.coeffs.iter().map(|c| c / &ca).collect() };
        b = IntPoly { coeffs: b.coeffs.iter().map(|c| c / &cb).collect() };
        let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg() - b.deg();
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            let div = &g * num_traits::pow(h.clone(), delta);
            b = IntPoly { coeffs: r.coeffs.iter().map(|c| c / &div).collect() };
            g = a.lc();
            h = if delta == 0 { h } else { num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1) };
            if b.is_zero() {
                return BigInt::zero();
            }
            if b.deg() == 0 {
                let da = a.deg();
                let hh = num_traits::pow(b.lc(), da) / num_traits::pow(h, da - 1);
                return BigInt::from(s) * t * hh;
            }
        }
    }

    /// Squarefree part over `Q`, as a primitive integer polynomial.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero(), "squarefree part of zero");
        if self.is_constant() {
            return IntPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part().exact_div(&g.primitive_part()).expect("gcd divides").primitive_part()
    }

    /// Largest `k` with `x^k | self`, and the cofactor.
    pub fn strip_x(&self) -> (usize, IntPoly) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, IntPoly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    /// Remove all factors of `d` (primitive): returns (multiplicity, cofactor).
    pub fn strip_factor(&self, d: &IntPoly) -> (usize, IntPoly) {
        let mut f = self.clone();
        let mut k = 0;
        while !f.is_zero() && f.deg() >= d.deg() {
            match f.exact_div(d) {
                Some(q) => {
                    f = q;
                    k += 1;
                }
                None => break,
            }
        }
        (k, f)
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

fn fast_path_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_above(1 << 62, 3))
}

/// True only when the images modulo a prime not dividing either leading
/// coefficient are coprime, which forces coprimality over `Q`.
pub fn coprime_mod_p(a: &IntPoly, b: &IntPoly) -> bool {
    for &p in fast_path_primes() {
        let pb = BigInt::from(p);
        if (a.lc() % &pb).is_zero() || (b.lc() % &pb).is_zero() {
            continue;
        }
        return a.reduce_mod(p).gcd(&b.reduce_mod(p)).is_one();
    }
    false
}

/// Serialized as decimal coefficient strings, constant term first.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs =
            v.iter().map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom)).collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.to_string()))
            .collect();
        f.write_str(&render_terms(&terms, "x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> IntPoly {
        IntPoly::from_i64s(v)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(z(&[1, 1, 1]).resultant(&z(&[-1, 1])), BigInt::from(3));
        assert_eq!(z(&[1, 0, 1]).resultant(&z(&[1, 0, 1])), BigInt::zero());
        // Res(x, x - 2) = 0 - 2
        assert_eq!(z(&[0, 1]).resultant(&z(&[-2, 1])), BigInt::from(-2));
        // Res(2x^2 + 3, x^3 - 1) against the Sylvester product formula:
        // lc(g)^2 * prod g(roots f) = 2^3 * prod (r^3 - 1) over r^2 = -3/2
        // r^3 - 1 = -3r/2 - 1, product = (9/4) r1 r2 + 1 = 35/8
        assert_eq!(z(&[3, 0, 2]).resultant(&z(&[-1, 0, 0, 1])), BigInt::from(35));
    }

    #[test]
    fn gcd_and_division() {
        let p3 = z(&[0, -3, -3]);
        let p5 = z(&[0, -5, -10, -10, -5]);
        assert_eq!(p3.gcd(&p5), z(&[0, 1, 1]));
        assert_eq!(p5.exact_div(&z(&[0, 1, 1])), Some(z(&[-5, -5, -5])));
        assert!(z(&[1, 0, 1]).exact_div(&z(&[1, 2])).is_none());
        assert_eq!(z(&[0, 0, 1, 1]).squarefree_part(), z(&[0, 1, 1]));
        assert_eq!(z(&[6, 12]).gcd(&z(&[4])), z(&[2]));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let f = z(&[1, -2, 0, 5, 3]);
        let d = z(&[2, 0, 3]);
        let r = f.pseudo_rem(&d);
        // lc(d)^3 f - r is divisible by d
        let lhs = f.scale(&BigInt::from(27)).sub(&r);
        assert!(lhs.exact_div(&d).is_some());
        assert!(r.deg() < d.deg());
    }
}
