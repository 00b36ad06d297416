//! Regular-sequence decisions for `p_a, p_b, p_c` in three variables
//! (over `C` and over the algebraic closure of `F_p`) and `p_a, p_b` in two.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::triple::triple_zset;
use super::{pair_zset, TripleZSet, TrivialZeros};
use crate::error::PolyError;
use crate::exactnum::fp::is_prime_u64;
use crate::exactnum::PrimeFieldElem;
use crate::unipoly::bivariate::{resultant_y_mod_p, IntBiPoly};
use crate::unipoly::factor::squarefree_decomposition;
use crate::unipoly::quotient::{ygcd_split, YPoly};
use crate::unipoly::{FpPoly, IntPoly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn ring(&self) -> Ring {
        match self {
            Characteristic::Zero => Ring::Rationals,
            Characteristic::Prime(p) => Ring::PrimeField(*p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regularity {
    Regular,
    NotRegular,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Witness {
    /// The point `(1 : 0 : -1)` and its permutations (all exponents odd).
    ZeroMinusOne,
    /// `(1 : w : w^2)` with `w` a primitive cube root of unity.
    CubeRoots,
    /// Nontrivial zeros `(1 : x : y)` with `x` a root of `poly` over `ring`.
    Factor {
        ring: Ring,
        poly: IntPoly,
    },
    /// A zero with last coordinate `0` other than the trivial ones.
    PointAtInfinity,
    /// Two of the polynomials share a curve component.
    CommonComponent,
    Characteristic2,
    /// Both reduced exponents odd: `(1 : -1)` is a common zero.
    OddPair,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegSeqVerdict {
    pub exponents: Vec<u64>,
    /// Exponents after dividing by their gcd.
    pub reduced: Vec<u64>,
    pub field: Characteristic,
    pub verdict: Regularity,
    pub witness: Option<Witness>,
    /// Why the verdict is `Unknown`, if it is.
    pub note: Option<String>,
}

impl RegSeqVerdict {
    fn new(exponents: &[u64], reduced: &[u64], field: Characteristic) -> Self {
        RegSeqVerdict {
            exponents: exponents.to_vec(),
            reduced: reduced.to_vec(),
            field,
            verdict: Regularity::Regular,
            witness: None,
            note: None,
        }
    }

    fn not_regular(mut self, w: Witness) -> Self {
        self.verdict = Regularity::NotRegular;
        self.witness = Some(w);
        self
    }

    fn unknown(mut self, note: String) -> Self {
        self.verdict = Regularity::Unknown;
        self.note = Some(note);
        self
    }
}

fn reduce_triple(a: u64, b: u64, c: u64) -> Result<[u64; 3], PolyError> {
    if !(0 < a && a < b && b < c) {
        return Err(PolyError::InvalidInput(format!("need 0 < a < b < c, got ({a},{b},{c})")));
    }
    let d = a.gcd(&b).gcd(&c);
    Ok([a / d, b / d, c / d])
}

fn trivial_witness(t: TrivialZeros) -> Option<Witness> {
    if t.zero_minus_one {
        Some(Witness::ZeroMinusOne)
    } else if t.cube_roots {
        Some(Witness::CubeRoots)
    } else {
        None
    }
}

/// Regularity of `p_a, p_b, p_c` in `C[x_1, x_2, x_3]`: regular iff the only
/// common zero is the origin.
pub fn regseq3_rational(a: u64, b: u64, c: u64) -> Result<RegSeqVerdict, PolyError> {
    let r = reduce_triple(a, b, c)?;
    let v = RegSeqVerdict::new(&[a, b, c], &r, Characteristic::Zero);
    if let Some(w) = trivial_witness(TrivialZeros::of(&r)) {
        return Ok(v.not_regular(w));
    }
    // zeros with a vanishing coordinate are trivial, so only (1 : x : y) remains
    let defining = if r[0] == 1 {
        pair_zset(r[1] as u32, r[2] as u32)?.defining
    } else {
        match triple_zset(r[0], r[1], r[2])? {
            TripleZSet::Decided(z) => z.defining,
            TripleZSet::Candidate(rep) => return Ok(v.unknown(rep.reason)),
        }
    };
    if defining.is_constant() {
        Ok(v)
    } else {
        Ok(v.not_regular(Witness::Factor { ring: Ring::Rationals, poly: defining }))
    }
}

fn fermat_bipoly(k: u64) -> IntBiPoly {
    let mut v = vec![IntPoly::zero(); k as usize + 1];
    v[0] = IntPoly::monomial(1.into(), k as usize).add(&IntPoly::one());
    v[k as usize] = IntPoly::one();
    v
}

fn fp_squarefree(f: &FpPoly) -> FpPoly {
    let p = *f.ctx();
    squarefree_decomposition(f).iter().fold(FpPoly::one(&p), |acc, (g, _)| acc.mul(g))
}

fn fp_to_int(f: &FpPoly) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.residue().into()).collect())
}

/// Regularity over the algebraic closure of `F_p`, by exhausting the
/// projective plane as `{z = 1} ∪ {z = 0, y = 1} ∪ {(1 : 0 : 0)}`.
pub fn regseq3_mod_p(a: u64, b: u64, c: u64, p: u64) -> Result<RegSeqVerdict, PolyError> {
    if p == 2 || !is_prime_u64(p) {
        return Err(PolyError::BadPrime(p, "need an odd prime".into()));
    }
    if a.is_multiple_of(p) || b.is_multiple_of(p) || c.is_multiple_of(p) {
        return Err(PolyError::BadPrime(p, format!("divides one of {a}, {b}, {c}")));
    }
    let r = reduce_triple(a, b, c)?;
    let v = RegSeqVerdict::new(&[a, b, c], &r, Characteristic::Prime(p));
    // the trivial zeros have integer (or cube-root) coordinates and survive reduction
    if let Some(w) = trivial_witness(TrivialZeros::of(&r)) {
        return Ok(v.not_regular(w));
    }
    let xk1 = |k: u64| {
        let mut f = FpPoly::monomial(PrimeFieldElem::from_reduced(1, p), k as usize, &p);
        f = f.add(&FpPoly::one(&p));
        f
    };
    if !xk1(r[0]).gcd(&xk1(r[1])).gcd(&xk1(r[2])).is_constant() {
        return Ok(v.not_regular(Witness::PointAtInfinity));
    }
    let fs = [fermat_bipoly(r[0]), fermat_bipoly(r[1]), fermat_bipoly(r[2])];
    let r1 = resultant_y_mod_p(&fs[0], &fs[1], p);
    let r2 = resultant_y_mod_p(&fs[0], &fs[2], p);
    if r1.is_zero() || r2.is_zero() {
        return Ok(v.not_regular(Witness::CommonComponent));
    }
    let g = r1.gcd(&r2);
    if g.is_constant() {
        return Ok(v);
    }
    let m = fp_squarefree(&g.monic());
    let ys: Vec<YPoly<PrimeFieldElem>> =
        fs.iter().map(|f| f.iter().map(|c| c.reduce_mod(p).rem(&m)).collect()).collect();
    let mut verified = FpPoly::one(&p);
    for (component, ygcd) in ygcd_split(&ys, &m) {
        if ygcd.len() >= 2 {
            verified = verified.mul(&component);
        }
    }
    if verified.is_constant() {
        Ok(v)
    } else {
        Ok(v.not_regular(Witness::Factor { ring: Ring::PrimeField(p), poly: fp_to_int(&verified) }))
    }
}

/// Regularity of `p_a, p_b` in two variables over a field of the given
/// characteristic.
pub fn regseq2(a: u64, b: u64, ch: Characteristic) -> Result<RegSeqVerdict, PolyError> {
    if a == 0 || b == 0 || a == b {
        return Err(PolyError::InvalidInput(format!("need distinct positive exponents, got ({a},{b})")));
    }
    if let Characteristic::Prime(p) = ch {
        if !is_prime_u64(p) {
            return Err(PolyError::BadPrime(p, "not prime".into()));
        }
    }
    let d = a.gcd(&b);
    let v = RegSeqVerdict::new(&[a, b], &[a / d, b / d], ch);
    if ch == Characteristic::Prime(2) {
        return Ok(v.not_regular(Witness::Characteristic2));
    }
    if (a / d) % 2 == 1 && (b / d) % 2 == 1 {
        return Ok(v.not_regular(Witness::OddPair));
    }
    Ok(v)
}
