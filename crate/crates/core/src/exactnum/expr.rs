//! Small arithmetic expression trees evaluated in interval arithmetic.

use std::fmt;

use num_rational::BigRational;

use super::interval::RealInterval;
use super::transcendental as tr;
use super::PrecisionPolicy;
use crate::error::NumError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(BigRational),
    Var(usize),
    Pi,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Exp(Box<Expr>),
    Log(Box<Expr>),
    Cos(Box<Expr>),
    Sqrt(Box<Expr>),
    Abs(Box<Expr>),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Const(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Expr {
        Expr::Const(BigRational::new(n.into(), d.into()))
    }

    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }

    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(o))
    }

    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }

    pub fn div(self, o: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(o))
    }

    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    pub fn pow(self, n: u32) -> Expr {
        Expr::Pow(Box::new(self), n)
    }

    pub fn exp(self) -> Expr {
        Expr::Exp(Box::new(self))
    }

    pub fn log(self) -> Expr {
        Expr::Log(Box::new(self))
    }

    pub fn cos(self) -> Expr {
        Expr::Cos(Box::new(self))
    }

    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    pub fn abs(self) -> Expr {
        Expr::Abs(Box::new(self))
    }

    /// Enclosure of the expression at the given inputs and working precision.
    pub fn eval(&self, inputs: &[RealInterval], prec: u32) -> Result<RealInterval, NumError> {
        Ok(match self {
            Expr::Const(q) => RealInterval::from_rational(q, prec),
            Expr::Var(i) => inputs.get(*i).ok_or(NumError::UnknownVariable(*i))?.with_prec(prec),
            Expr::Pi => tr::pi(prec),
            Expr::Add(a, b) => &a.eval(inputs, prec)? + &b.eval(inputs, prec)?,
            Expr::Sub(a, b) => &a.eval(inputs, prec)? - &b.eval(inputs, prec)?,
            Expr::Mul(a, b) => &a.eval(inputs, prec)? * &b.eval(inputs, prec)?,
            Expr::Div(a, b) => a.eval(inputs, prec)?.div(&b.eval(inputs, prec)?)?,
            Expr::Neg(a) => -&a.eval(inputs, prec)?,
            Expr::Pow(a, n) => a.eval(inputs, prec)?.pow(*n),
            Expr::Exp(a) => tr::exp(&a.eval(inputs, prec)?),
            Expr::Log(a) => tr::log(&a.eval(inputs, prec)?)?,
            Expr::Cos(a) => tr::cos(&a.eval(inputs, prec)?),
            Expr::Sqrt(a) => a.eval(inputs, prec)?.sqrt()?,
            Expr::Abs(a) => a.eval(inputs, prec)?.abs(),
        })
    }

    /// Exact rational value when the tree uses only field operations.
    pub fn eval_exact(&self, inputs: &[BigRational]) -> Option<BigRational> {
        use num_traits::{Signed, Zero};
        Some(match self {
            Expr::Const(q) => q.clone(),
            Expr::Var(i) => inputs.get(*i)?.clone(),
            Expr::Add(a, b) => a.eval_exact(inputs)? + b.eval_exact(inputs)?,
            Expr::Sub(a, b) => a.eval_exact(inputs)? - b.eval_exact(inputs)?,
            Expr::Mul(a, b) => a.eval_exact(inputs)? * b.eval_exact(inputs)?,
            Expr::Div(a, b) => {
                let d = b.eval_exact(inputs)?;
                if d.is_zero() {
                    return None;
                }
                a.eval_exact(inputs)? / d
            }
            Expr::Neg(a) => -a.eval_exact(inputs)?,
            Expr::Pow(a, n) => num_traits::pow(a.eval_exact(inputs)?, *n as usize),
            Expr::Abs(a) => a.eval_exact(inputs)?.abs(),
            _ => return None,
        })
    }

    /// Re-evaluate with exact rational inputs at doubling precision until the
    /// enclosure is narrower than `width`.
    pub fn eval_refined(
        &self,
        inputs: &[BigRational],
        width: &BigRational,
        policy: &PrecisionPolicy,
    ) -> Result<RealInterval, NumError> {
        let mut prec = policy.start;
        loop {
            let ins: Vec<_> = inputs.iter().map(|q| RealInterval::from_rational(q, prec)).collect();
            let v = self.eval(&ins, prec)?;
            if v.width_below(width) {
                return Ok(v);
            }
            if prec >= policy.cap {
                return Err(NumError::PrecisionExhausted { cap: policy.cap });
            }
            prec = (prec * 2).min(policy.cap);
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(q) => write!(f, "{q}"),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Pi => write!(f, "pi"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Pow(a, n) => write!(f, "{a}^{n}"),
            Expr::Exp(a) => write!(f, "exp({a})"),
            Expr::Log(a) => write!(f, "log({a})"),
            Expr::Cos(a) => write!(f, "cos({a})"),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Abs(a) => write!(f, "|{a}|"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_constant_at_fourteen_ninths() {
        // (t^2 - 3/4)^3 / (1/4 + t^2)^2 with t^2 = 703/324
        let t2 = Expr::var(0);
        let e = t2.clone().sub(Expr::ratio(3, 4)).pow(3).div(Expr::ratio(1, 4).add(t2).pow(2));
        let v = e.eval(&[RealInterval::from_ratio(703, 324, 64)], 64).unwrap();
        assert!(v.lo_f64() > 0.4885 && v.hi_f64() < 0.4890);
    }

    #[test]
    fn refinement_reaches_width() {
        let e = Expr::Pi.mul(Expr::var(0)).cos();
        let w = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(40));
        let v = e.eval_refined(&[BigRational::new(1.into(), 3.into())], &w, &PrecisionPolicy::default()).unwrap();
        assert!((v.mid_f64() - 0.5).abs() < 1e-15);
        let tight = PrecisionPolicy { start: 16, cap: 32 };
        let w = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(60));
        assert_eq!(
            e.eval_refined(&[BigRational::new(1.into(), 3.into())], &w, &tight),
            Err(NumError::PrecisionExhausted { cap: 32 })
        );
    }

    #[test]
    fn domain_errors() {
        let e = Expr::var(0).log();
        assert!(matches!(e.eval(&[RealInterval::from_int(-1, 64)], 64), Err(NumError::Domain(_))));
        let e = Expr::int(1).div(Expr::var(0));
        assert!(e.eval(&[RealInterval::from_ratio(-1, 2, 64).hull(&RealInterval::one(64))], 64).is_err());
    }
}
