//! Nontrivial common zeros of `1 + x^k + y^k` for `k = a, b, c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{cube_root_poly, TrivialZeros, ZSet};
use crate::error::PolyError;
use crate::unipoly::quotient::{ygcd_split, YPoly};
use crate::unipoly::{IntPoly, RatPoly};

/// Residual degrees above this are reported as candidates instead of
/// running the y-existence check over `Q[x]/(q)`.
pub const TRIPLE_DEGREE_BUDGET: usize = 240;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub exponents: Vec<u64>,
    /// Squarefree residual of the x-projection after stripping trivial factors.
    pub residual: IntPoly,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TripleZSet {
    Decided(ZSet),
    Candidate(CandidateReport),
}

fn one_plus_xk(k: u64) -> IntPoly {
    IntPoly::monomial(BigInt::from(1), k as usize).add(&IntPoly::one())
}

/// `(1 + x^a)^b - (-1)^{a+b} (1 + x^b)^a`, which vanishes at `x` whenever
/// some `y` satisfies `1 + x^a + y^a = 1 + x^b + y^b = 0`.
fn eliminant(a: u64, b: u64) -> IntPoly {
    let l = one_plus_xk(a).pow(b as u32);
    let r = one_plus_xk(b).pow(a as u32);
    if (a + b).is_multiple_of(2) {
        l.sub(&r)
    } else {
        l.add(&r)
    }
}

/// The three x-eliminants of the system for `(a, b, c)`.
pub fn triple_polynomials(a: u64, b: u64, c: u64) -> [IntPoly; 3] {
    [eliminant(a, b), eliminant(a, c), eliminant(b, c)]
}

/// `1 + x^k + y^k` as a y-polynomial with coefficients in `Q[x] / (m)`.
fn fermat_ypoly(k: u64, m: &RatPoly) -> YPoly<BigRational> {
    let mut v = vec![RatPoly::zero(&()); k as usize + 1];
    v[0] = one_plus_xk(k).to_rat().rem(m);
    v[k as usize] = RatPoly::one(&());
    v
}

fn validate(a: u64, b: u64, c: u64) -> Result<(), PolyError> {
    if !(2 <= a && a < b && b < c) {
        return Err(PolyError::InvalidInput(format!("need 2 <= a < b < c, got ({a},{b},{c})")));
    }
    if a.gcd(&b).gcd(&c) != 1 {
        return Err(PolyError::InvalidInput(format!("gcd({a},{b},{c}) must be 1")));
    }
    Ok(())
}

/// Decide the nontrivial part of `Z(a, b, c)`. An empty answer is a
/// certificate; a nonempty one lists only x-values verified to admit a
/// common y-root.
pub fn triple_zset(a: u64, b: u64, c: u64) -> Result<TripleZSet, PolyError> {
    validate(a, b, c)?;
    let exponents = vec![a, b, c];
    let trivial = TrivialZeros::of(&exponents);
    let [f1, f2, f3] = triple_polynomials(a, b, c);
    let g = f1.gcd(&f2).gcd(&f3);
    let (_, g) = g.strip_x();
    let (_, g) = g.strip_factor(&IntPoly::from_i64s(&[1, 1]));
    let (_, g) = g.strip_factor(&cube_root_poly());
    let empty = |exponents| Ok(TripleZSet::Decided(ZSet { exponents, defining: IntPoly::one(), trivial }));
    if g.is_constant() {
        return empty(exponents);
    }
    let q = g.squarefree_part();
    if q.deg() > TRIPLE_DEGREE_BUDGET {
        return Ok(TripleZSet::Candidate(CandidateReport {
            exponents,
            residual: q.clone(),
            reason: format!("residual degree {} exceeds budget {}", q.deg(), TRIPLE_DEGREE_BUDGET),
        }));
    }
    let m = q.to_rat().monic();
    let ys = [fermat_ypoly(a, &m), fermat_ypoly(b, &m), fermat_ypoly(c, &m)];
    let mut verified = RatPoly::one(&());
    for (component, ygcd) in ygcd_split(&ys, &m) {
        if ygcd.len() >= 2 {
            verified = verified.mul(&component);
        }
    }
    if verified.is_constant() {
        return empty(exponents);
    }
    Ok(TripleZSet::Decided(ZSet { exponents, defining: IntPoly::from_rat_primitive(&verified), trivial }))
}
