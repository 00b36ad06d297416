//! Prime-field scalars and prime generation for moduli below 2^63.

use std::fmt;

use crate::error::PolyError;

/// A residue modulo a prime `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    pub fn new(v: i128, p: u64) -> Self {
        PrimeFieldElem { residue: v.rem_euclid(p as i128) as u64, modulus: p }
    }

    /// `r` must already be reduced.
    #[inline]
    pub fn from_reduced(r: u64, p: u64) -> Self {
        debug_assert!(r < p);
        PrimeFieldElem { residue: r, modulus: p }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        PrimeFieldElem { residue: add_mod(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }

    pub fn sub(self, o: Self) -> Self {
        PrimeFieldElem { residue: sub_mod(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }

    pub fn mul(self, o: Self) -> Self {
        PrimeFieldElem { residue: mul_mod(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }

    pub fn neg(self) -> Self {
        PrimeFieldElem { residue: sub_mod(0, self.residue, self.modulus), modulus: self.modulus }
    }

    pub fn pow(self, e: u64) -> Self {
        PrimeFieldElem { residue: pow_mod(self.residue, e, self.modulus), modulus: self.modulus }
    }

    pub fn inv(self) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes strictly above `start`.
pub fn primes_above(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = start + 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// Reject moduli the finite-field code cannot handle.
pub fn check_odd_prime(p: u64) -> Result<(), PolyError> {
    if p == 2 {
        return Err(PolyError::BadPrime(p, "characteristic 2 is excluded".into()));
    }
    if p >= 1 << 63 || !is_prime_u64(p) {
        return Err(PolyError::BadPrime(p, "not an odd prime below 2^63".into()));
    }
    Ok(())
}
