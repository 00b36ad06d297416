//! Ring-tagged polynomials and the ring-checked entry points.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::bivariate::field_resultant;
use super::dense::{FpPoly, RatPoly};
use super::intpoly::IntPoly;
use crate::error::PolyError;
use crate::exactnum::PrimeFieldElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, PartialEq)]
pub enum ExactPoly {
    Z(IntPoly),
    Q(RatPoly),
    Fp(FpPoly),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Z(BigInt),
    Q(BigRational),
    Fp(PrimeFieldElem),
}

impl ExactPoly {
    pub fn ring(&self) -> Ring {
        match self {
            ExactPoly::Z(_) => Ring::Integers,
            ExactPoly::Q(_) => Ring::Rationals,
            ExactPoly::Fp(f) => Ring::PrimeField(*f.ctx()),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            ExactPoly::Z(f) => f.degree(),
            ExactPoly::Q(f) => f.degree(),
            ExactPoly::Fp(f) => f.degree(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    fn same_ring(&self, o: &ExactPoly) -> Result<(), PolyError> {
        if self.ring() == o.ring() {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(self.ring().to_string(), o.ring().to_string()))
        }
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactPoly::Z(p) => write!(f, "{p}"),
            ExactPoly::Q(p) => write!(f, "{p}"),
            ExactPoly::Fp(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ring())
    }
}

/// Greatest common divisor: monic over fields, primitive with positive
/// leading coefficient (times the content gcd) over the integers.
pub fn poly_gcd(f: &ExactPoly, g: &ExactPoly) -> Result<ExactPoly, PolyError> {
    f.same_ring(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(match (f, g) {
        (ExactPoly::Z(a), ExactPoly::Z(b)) => ExactPoly::Z(a.gcd(b)),
        (ExactPoly::Q(a), ExactPoly::Q(b)) => {
            let ia = IntPoly::from_rat_primitive(a);
            let ib = IntPoly::from_rat_primitive(b);
            ExactPoly::Q(ia.gcd(&ib).to_rat().monic())
        }
        (ExactPoly::Fp(a), ExactPoly::Fp(b)) => ExactPoly::Fp(a.gcd(b)),
        _ => unreachable!("rings checked"),
    })
}

pub fn resultant(f: &ExactPoly, g: &ExactPoly) -> Result<Scalar, PolyError> {
    f.same_ring(g)?;
    Ok(match (f, g) {
        (ExactPoly::Z(a), ExactPoly::Z(b)) => Scalar::Z(a.resultant(b)),
        (ExactPoly::Q(a), ExactPoly::Q(b)) => Scalar::Q(field_resultant(a, b)),
        (ExactPoly::Fp(a), ExactPoly::Fp(b)) => Scalar::Fp(field_resultant(a, b)),
        _ => unreachable!("rings checked"),
    })
}

/// Product of the distinct irreducible factors (primitive over `Z` and `Q`,
/// monic over prime fields).
pub fn squarefree_part(f: &ExactPoly) -> Result<ExactPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(match f {
        ExactPoly::Z(a) => ExactPoly::Z(a.squarefree_part()),
        ExactPoly::Q(a) => ExactPoly::Q(IntPoly::from_rat_primitive(a).squarefree_part().to_rat()),
        ExactPoly::Fp(a) => {
            let parts = super::factor::squarefree_decomposition(a);
            let p = *a.ctx();
            ExactPoly::Fp(parts.iter().fold(FpPoly::one(&p), |acc, (g, _)| acc.mul(g)))
        }
    })
}
