use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::fp::{add_mod, inv_mod, mul_mod, sub_mod};
use crate::exactnum::PrimeFieldElem;

/// Coefficient field for [`DensePoly`](super::DensePoly). Operations take the
/// field context (unit for the rationals, the modulus for prime fields).
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(v: i64, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn sub(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn mul(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn neg(&self, ctx: &Self::Ctx) -> Self;
    fn inv(&self, ctx: &Self::Ctx) -> Option<Self>;
    fn characteristic(ctx: &Self::Ctx) -> u64;
    fn render(&self) -> String;
}

impl Field for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64, _: &()) -> Self {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self, _: &()) -> Self {
        self + o
    }
    fn sub(&self, o: &Self, _: &()) -> Self {
        self - o
    }
    fn mul(&self, o: &Self, _: &()) -> Self {
        self * o
    }
    fn neg(&self, _: &()) -> Self {
        -self
    }
    fn inv(&self, _: &()) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for PrimeFieldElem {
    type Ctx = u64;

    fn zero(p: &u64) -> Self {
        PrimeFieldElem::new(0, *p)
    }
    fn one(p: &u64) -> Self {
        PrimeFieldElem::new(1, *p)
    }
    fn from_i64(v: i64, p: &u64) -> Self {
        PrimeFieldElem::new(v as i128, *p)
    }
    fn is_zero(&self) -> bool {
        self.residue() == 0
    }
    fn is_one(&self) -> bool {
        self.residue() == 1
    }
    fn add(&self, o: &Self, p: &u64) -> Self {
        PrimeFieldElem::from_reduced(add_mod(self.residue(), o.residue(), *p), *p)
    }
    fn sub(&self, o: &Self, p: &u64) -> Self {
        PrimeFieldElem::from_reduced(sub_mod(self.residue(), o.residue(), *p), *p)
    }
    fn mul(&self, o: &Self, p: &u64) -> Self {
        PrimeFieldElem::from_reduced(mul_mod(self.residue(), o.residue(), *p), *p)
    }
    fn neg(&self, p: &u64) -> Self {
        PrimeFieldElem::from_reduced(sub_mod(0, self.residue(), *p), *p)
    }
    fn inv(&self, p: &u64) -> Option<Self> {
        inv_mod(self.residue(), *p).map(|v| PrimeFieldElem::from_reduced(v, *p))
    }
    fn characteristic(p: &u64) -> u64 {
        *p
    }
    fn render(&self) -> String {
        self.residue().to_string()
    }
}
