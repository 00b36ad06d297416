//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use super::field::Field;
use crate::exactnum::PrimeFieldElem;

#[derive(Clone, PartialEq)]
pub struct DensePoly<F: Field> {
    coeffs: Vec<F>,
    ctx: F::Ctx,
}

pub type RatPoly = DensePoly<num_rational::BigRational>;
pub type FpPoly = DensePoly<PrimeFieldElem>;

impl<F: Field> DensePoly<F> {
    /// Coefficients constant term first; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<F>, ctx: F::Ctx) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs, ctx }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        DensePoly { coeffs: Vec::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        DensePoly { coeffs: vec![F::one(ctx)], ctx: ctx.clone() }
    }

    pub fn constant(c: F, ctx: &F::Ctx) -> Self {
        DensePoly::new(vec![c], ctx.clone())
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        DensePoly::monomial(F::one(ctx), 1, ctx)
    }

    pub fn monomial(c: F, k: usize, ctx: &F::Ctx) -> Self {
        let mut v = vec![F::zero(ctx); k + 1];
        v[k] = c;
        DensePoly::new(v, ctx.clone())
    }

    pub fn from_i64s(v: &[i64], ctx: &F::Ctx) -> Self {
        DensePoly::new(v.iter().map(|&c| F::from_i64(c, ctx)).collect(), ctx.clone())
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&o.coeff(i), &self.ctx)).collect();
        DensePoly::new(v, self.ctx.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i), &self.ctx)).collect();
        DensePoly::new(v, self.ctx.clone())
    }

    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(|c| c.neg(&self.ctx)).collect(), ctx: self.ctx.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return DensePoly::zero(&self.ctx);
        }
        let mut v = vec![F::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b, &self.ctx), &self.ctx);
            }
        }
        DensePoly::new(v, self.ctx.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        DensePoly::new(self.coeffs.iter().map(|a| a.mul(c, &self.ctx)).collect(), self.ctx.clone())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs: v, ctx: self.ctx.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = DensePoly::one(&self.ctx);
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

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv(&self.ctx).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (DensePoly::zero(&self.ctx), self.clone());
        }
        let ctx = &self.ctx;
        let inv = d.lc().inv(ctx).expect("nonzero leading coefficient");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(ctx); self.coeffs.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul(&inv, ctx);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].sub(&c.mul(dc, ctx), ctx);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (DensePoly::new(q, ctx.clone()), DensePoly::new(r, ctx.clone()))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (DensePoly::one(ctx), DensePoly::zero(ctx));
        let (mut t0, mut t1) = (DensePoly::zero(ctx), DensePoly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv(ctx).expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        let ctx = &self.ctx;
        let v = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&F::from_i64(i as i64, ctx), ctx)).collect();
        DensePoly::new(v, ctx.clone())
    }

    pub fn eval(&self, x: &F) -> F {
        let ctx = &self.ctx;
        self.coeffs.iter().rev().fold(F::zero(ctx), |acc, c| acc.mul(x, ctx).add(c, ctx))
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let ctx = &self.ctx;
        self.coeffs
            .iter()
            .rev()
            .fold(DensePoly::zero(ctx), |acc, c| acc.mul(g).add(&DensePoly::constant(c.clone(), ctx)))
    }

    /// `self^e mod m`, exponent given as little-endian 64-bit limbs.
    pub fn pow_mod(&self, e: &[u64], m: &Self) -> Self {
        let mut result = DensePoly::one(&self.ctx).rem(m);
        let base = self.rem(m);
        for limb in e.iter().rev() {
            for bit in (0..64).rev() {
                result = result.mul(&result).rem(m);
                if (limb >> bit) & 1 == 1 {
                    result = result.mul(&base).rem(m);
                }
            }
        }
        result
    }

    /// Product of the distinct irreducible factors, made monic. Valid in
    /// characteristic 0; prime fields use [`squarefree_decomposition`](super::factor::squarefree_decomposition).
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of zero");
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_one()
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> DensePoly<G> {
        DensePoly::new(self.coeffs.iter().map(f).collect(), ctx.clone())
    }
}

impl<F: Field> fmt::Display for DensePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, String)> =
            self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.render())).collect();
        f.write_str(&render_terms(&terms, "x"))
    }
}

impl<F: Field> fmt::Debug for DensePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Render `(exponent, coefficient text)` pairs, highest degree first, as
/// `2x^2 + 2x + 2`.
pub fn render_terms(terms: &[(usize, String)], var: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c.clone()),
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = if mag.contains('/') && *k > 0 { format!("({mag})") } else { mag };
        match *k {
            0 => out.push_str(&mag),
            _ => {
                if mag != "1" {
                    out.push_str(&mag);
                }
                out.push_str(var);
                if *k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> RatPoly {
        RatPoly::from_i64s(v, &())
    }

    #[test]
    fn division_and_gcd() {
        let f = q(&[1, 2, 1]); // (x+1)^2
        let g = q(&[-1, 0, 1]); // (x-1)(x+1)
        assert_eq!(f.gcd(&g), q(&[1, 1]));
        let (qq, r) = f.divrem(&g);
        assert_eq!(qq.mul(&g).add(&r), f);
        let (d, s, t) = f.ext_gcd(&g);
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
        assert_eq!(q(&[0, 0, 1, 1]).squarefree_part(), q(&[0, 1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[2, 2, 2]).to_string(), "2x^2 + 2x + 2");
        assert_eq!(q(&[0, -1, 0, 1]).to_string(), "x^3 - x");
        let h = RatPoly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into())], ());
        assert_eq!(h.to_string(), "-3x + 1/2");
        assert_eq!(q(&[]).to_string(), "0");
    }

    #[test]
    fn fp_pow_mod() {
        let p = 7u64;
        let x = FpPoly::x(&p);
        let m = FpPoly::from_i64s(&[0, -1, 0, 1], &p); // x^3 - x splits over F_7
        assert_eq!(x.pow_mod(&[7], &m), x.rem(&m));
    }
}
