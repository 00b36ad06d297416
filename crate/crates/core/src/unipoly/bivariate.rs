//! Elimination of `y` from two bivariate polynomials by evaluation at
//! `x = 0, 1, 2, ...` and interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::dense::{DensePoly, FpPoly, RatPoly};
use super::field::Field;
use super::intpoly::IntPoly;
use crate::exactnum::PrimeFieldElem;

/// Bivariate polynomial as y-coefficients (constant first), each in `K[x]`.
pub type BiPoly<F> = Vec<DensePoly<F>>;

/// Integer bivariate polynomial, y-coefficients in `Z[x]`.
pub type IntBiPoly = Vec<IntPoly>;

fn y_degree<F: Field>(f: &BiPoly<F>) -> usize {
    f.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn x_degree<F: Field>(f: &BiPoly<F>) -> usize {
    f.iter().map(|c| c.deg()).max().unwrap_or(0)
}

/// Resultant of two univariate polynomials over a field by the Euclidean
/// recurrence `Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)`.
pub fn field_resultant<F: Field>(f: &DensePoly<F>, g: &DensePoly<F>) -> F {
    let ctx = f.ctx().clone();
    if f.is_zero() || g.is_zero() {
        return F::zero(&ctx);
    }
    let mut acc = F::one(&ctx);
    let (mut f, mut g) = (f.clone(), g.clone());
    loop {
        let m = f.deg();
        let n = g.deg();
        if n == 0 {
            return acc.mul(&pow(&g.lc(), m, &ctx), &ctx);
        }
        let r = f.rem(&g);
        if r.is_zero() {
            return F::zero(&ctx);
        }
        if (m * n) % 2 == 1 {
            acc = acc.neg(&ctx);
        }
        acc = acc.mul(&pow(&g.lc(), m - r.deg(), &ctx), &ctx);
        f = g;
        g = r;
    }
}

fn pow<F: Field>(b: &F, e: usize, ctx: &F::Ctx) -> F {
    let mut r = F::one(ctx);
    let mut base = b.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            r = r.mul(&base, ctx);
        }
        base = base.mul(&base, ctx);
        e >>= 1;
    }
    r
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F], ctx: &F::Ctx) -> DensePoly<F> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].sub(&dd[i - 1], ctx);
            let den = xs[i].sub(&xs[i - j], ctx);
            dd[i] = num.mul(&den.inv(ctx).expect("distinct nodes"), ctx);
        }
    }
    let mut acc = DensePoly::zero(ctx);
    for i in (0..n).rev() {
        let lin = DensePoly::new(vec![xs[i].neg(ctx), F::one(ctx)], ctx.clone());
        acc = acc.mul(&lin).add(&DensePoly::constant(dd[i].clone(), ctx));
    }
    acc
}

/// `Res_y(f, g)` as a polynomial in `x`, or `None` if the field has too
/// few elements for interpolation.
pub fn resultant_y<F: Field>(f: &BiPoly<F>, g: &BiPoly<F>, ctx: &F::Ctx) -> Option<DensePoly<F>> {
    let (m, n) = (y_degree(f), y_degree(g));
    if f.iter().all(|c| c.is_zero()) || g.iter().all(|c| c.is_zero()) {
        return Some(DensePoly::zero(ctx));
    }
    let bound = n * x_degree(f) + m * x_degree(g);
    let (lf, lg) = (&f[m], &g[n]);
    let char_p = F::characteristic(ctx);
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        if char_p != 0 && k as u64 >= char_p {
            return None;
        }
        let x0 = F::from_i64(k, ctx);
        k += 1;
        if lf.eval(&x0).is_zero() || lg.eval(&x0).is_zero() {
            continue;
        }
        let fe = DensePoly::new(f.iter().map(|c| c.eval(&x0)).collect(), ctx.clone());
        let ge = DensePoly::new(g.iter().map(|c| c.eval(&x0)).collect(), ctx.clone());
        ys.push(field_resultant(&fe, &ge));
        xs.push(x0);
    }
    Some(interpolate(&xs, &ys, ctx))
}

pub fn int_bipoly_to_rat(f: &IntBiPoly) -> BiPoly<BigRational> {
    f.iter().map(|c| c.to_rat()).collect()
}

pub fn int_bipoly_mod_p(f: &IntBiPoly, p: u64) -> BiPoly<PrimeFieldElem> {
    f.iter().map(|c| c.reduce_mod(p)).collect()
}

/// `Res_y` over `Q` of integer inputs, as an integer polynomial.
pub fn resultant_y_int(f: &IntBiPoly, g: &IntBiPoly) -> IntPoly {
    let r = resultant_y(&int_bipoly_to_rat(f), &int_bipoly_to_rat(g), &()).expect("Q is infinite");
    rat_to_int_exact(&r)
}

fn rat_to_int_exact(r: &RatPoly) -> IntPoly {
    IntPoly::new(
        r.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "resultant of integer polynomials is integral");
                c.to_integer()
            })
            .collect(),
    )
}

/// `Res_y(f, g) mod p` for integer inputs whose leading y-coefficients are
/// units modulo `p`. Small primes go through the integer resultant.
pub fn resultant_y_mod_p(f: &IntBiPoly, g: &IntBiPoly, p: u64) -> FpPoly {
    match resultant_y(&int_bipoly_mod_p(f, p), &int_bipoly_mod_p(g, p), &p) {
        Some(r) => r,
        None => resultant_y_int(f, g).reduce_mod(p),
    }
}

/// Evaluate an integer bivariate polynomial at integers (test helper).
pub fn eval_int_bipoly(f: &IntBiPoly, x: i64, y: i64) -> BigInt {
    let xb = BigInt::from(x);
    let yb = BigInt::from(y);
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * &yb + c.eval(&xb))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eliminate_linear() {
        // Res_y(1 + x + y, 1 + x^2 + y^2) = 2x^2 + 2x + 2
        let f: IntBiPoly = vec![IntPoly::from_i64s(&[1, 1]), IntPoly::from_i64s(&[1])];
        let g: IntBiPoly = vec![IntPoly::from_i64s(&[1, 0, 1]), IntPoly::zero(), IntPoly::from_i64s(&[1])];
        assert_eq!(resultant_y_int(&f, &g), IntPoly::from_i64s(&[2, 2, 2]));
        assert_eq!(resultant_y_mod_p(&f, &g, 5), FpPoly::from_i64s(&[2, 2, 2], &5));
        assert_eq!(resultant_y_mod_p(&f, &g, 1_000_003), FpPoly::from_i64s(&[2, 2, 2], &1_000_003));
    }

    #[test]
    fn field_resultant_matches_integer() {
        let a = IntPoly::from_i64s(&[3, 0, 2]);
        let b = IntPoly::from_i64s(&[-1, 0, 0, 1]);
        let r = field_resultant(&a.to_rat(), &b.to_rat());
        assert_eq!(r, BigRational::from_integer(a.resultant(&b)));
    }
}
