use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::interval::RealInterval;
use super::transcendental;
use crate::error::NumError;

/// Rectangular complex enclosure.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn real(re: RealInterval) -> Self {
        let p = re.prec();
        ComplexBox { re, im: RealInterval::zero(p) }
    }

    pub fn from_rational(re: &BigRational, im: &BigRational, prec: u32) -> Self {
        ComplexBox { re: RealInterval::from_rational(re, prec), im: RealInterval::from_rational(im, prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> RealInterval {
        &self.re.sqr() + &self.im.sqr()
    }

    pub fn abs(&self) -> RealInterval {
        self.norm_sqr().sqrt().expect("norm is nonnegative")
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn recip(&self) -> Result<ComplexBox, NumError> {
        let n = self.norm_sqr();
        if n.contains_zero() {
            return Err(NumError::Domain("reciprocal of a box containing 0".into()));
        }
        Ok(ComplexBox { re: self.re.div(&n)?, im: (-&self.im).div(&n)? })
    }

    pub fn div(&self, other: &ComplexBox) -> Result<ComplexBox, NumError> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, n: u32) -> ComplexBox {
        let p = self.prec();
        let mut result = ComplexBox::real(RealInterval::one(p));
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn arg(&self) -> Result<RealInterval, NumError> {
        transcendental::arg(&self.re, &self.im)
    }

    pub fn scale(&self, k: &RealInterval) -> ComplexBox {
        ComplexBox { re: &self.re * k, im: &self.im * k }
    }

    /// Horner evaluation of an integer-coefficient polynomial (constant term first).
    pub fn eval_int_poly(&self, coeffs: &[BigInt]) -> ComplexBox {
        let p = self.prec();
        let mut acc = ComplexBox::real(RealInterval::zero(p));
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &ComplexBox::real(RealInterval::from_int(c.clone(), p));
        }
        acc
    }

    pub fn eval_rat_poly(&self, coeffs: &[BigRational]) -> ComplexBox {
        let p = self.prec();
        let mut acc = ComplexBox::real(RealInterval::zero(p));
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &ComplexBox::real(RealInterval::from_rational(c, p));
        }
        acc
    }
}

impl Add for &ComplexBox {
    type Output = ComplexBox;
    fn add(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &ComplexBox {
    type Output = ComplexBox;
    fn sub(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &ComplexBox {
    type Output = ComplexBox;
    fn mul(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &ComplexBox {
    type Output = ComplexBox;
    fn neg(self) -> ComplexBox {
        ComplexBox { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_and_modulus() {
        let z = ComplexBox::new(RealInterval::from_ratio(-1, 2, 80), RealInterval::from_int(2, 80));
        let w = z.recip().unwrap();
        let prod = &z * &w;
        assert!(prod.re.contains_rational(&BigRational::from_integer(1.into())));
        assert!(prod.im.contains_zero());
        assert!((z.abs().mid_f64() - 4.25f64.sqrt()).abs() < 1e-15);
        assert!(ComplexBox::real(RealInterval::zero(64)).recip().is_err());
    }
}
