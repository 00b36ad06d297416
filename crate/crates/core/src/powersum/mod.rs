//! The polynomials `P_n = 1 + z^n + (-1 - z)^n`, their trivial factors, and
//! common-zero sets of the power-sum systems in three variables.

mod regseq;
mod triple;

pub use regseq::{regseq2, regseq3_mod_p, regseq3_rational, Characteristic, RegSeqVerdict, Regularity, Witness};
pub use triple::{triple_polynomials, triple_zset, CandidateReport, TripleZSet, TRIPLE_DEGREE_BUDGET};

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::unipoly::IntPoly;

/// `z^2 + z + 1`, whose roots are the primitive cube roots of unity.
pub fn cube_root_poly() -> IntPoly {
    IntPoly::from_i64s(&[1, 1, 1])
}

/// `z (z + 1)`.
pub fn zero_minus_one_poly() -> IntPoly {
    IntPoly::from_i64s(&[0, 1, 1])
}

/// `P_n(z) = 1 + z^n + (-1 - z)^n` expanded over the integers.
pub fn p_poly(n: u32) -> IntPoly {
    let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut v: Vec<BigInt> = (0..=n).map(|k| binomial(BigInt::from(n), BigInt::from(k)) * sign).collect();
    v[0] += 1;
    v[n as usize] += 1;
    IntPoly::new(v)
}

/// The trivial factor `C_n`, determined by `n mod 6`.
pub fn c_poly(n: u32) -> IntPoly {
    let w = cube_root_poly();
    let z = zero_minus_one_poly();
    match n % 6 {
        0 => IntPoly::one(),
        1 => z.mul(&w.pow(2)),
        2 => w,
        3 => z,
        4 => w.pow(2),
        _ => z.mul(&w),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PQDecomposition {
    pub n: u32,
    pub p: IntPoly,
    pub c: IntPoly,
    /// `P / C`; integral because `C` is monic.
    pub q: IntPoly,
}

impl PQDecomposition {
    pub fn q_degree(&self) -> usize {
        self.q.deg()
    }

    /// Primitive part of `Q_n` with positive leading coefficient.
    pub fn q_primitive(&self) -> IntPoly {
        self.q.primitive_part()
    }
}

pub fn build_pq(n: u32) -> Result<PQDecomposition, PolyError> {
    if n < 2 {
        return Err(PolyError::DivisionFailure(format!("P_n needs n >= 2, got {n}")));
    }
    let p = p_poly(n);
    let c = c_poly(n);
    let q = p.exact_div(&c).ok_or_else(|| PolyError::DivisionFailure(format!("C_{n} does not divide P_{n}")))?;
    Ok(PQDecomposition { n, p, c, q })
}

/// Which trivial zeros a system has.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialZeros {
    /// The zeros at `0` and `-1` (all exponents odd).
    pub zero_minus_one: bool,
    /// The zeros at the primitive cube roots of unity (no exponent divisible by 3).
    pub cube_roots: bool,
}

impl TrivialZeros {
    pub fn of(exps: &[u64]) -> Self {
        TrivialZeros { zero_minus_one: exps.iter().all(|e| e % 2 == 1), cube_roots: exps.iter().all(|e| e % 3 != 0) }
    }

    pub fn any(&self) -> bool {
        self.zero_minus_one || self.cube_roots
    }
}

/// Nontrivial common zeros (roots of `defining`, a primitive integer
/// polynomial coprime to `z (z + 1) (z^2 + z + 1)`) plus trivial flags.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZSet {
    pub exponents: Vec<u64>,
    pub defining: IntPoly,
    pub trivial: TrivialZeros,
}

impl ZSet {
    pub fn nontrivial_empty(&self) -> bool {
        self.defining.is_constant()
    }
}

/// `Z(b, c)`: roots of `gcd(Q_b, Q_c)` plus trivial flags for `(1, b, c)`.
pub fn pair_zset(b: u32, c: u32) -> Result<ZSet, PolyError> {
    let qb = build_pq(b)?.q;
    let qc = build_pq(c)?.q;
    let g = qb.gcd(&qc).primitive_part();
    let defining = if g.is_constant() { IntPoly::one() } else { g };
    Ok(ZSet { exponents: vec![b as u64, c as u64], defining, trivial: TrivialZeros::of(&[b as u64, c as u64]) })
}
