//! Irreducibility over `Q` certified by factor-degree patterns modulo
//! several primes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::factor::degree_pattern;
use super::intpoly::IntPoly;
use crate::exactnum::fp::is_prime_u64;

pub const DEFAULT_PRIME_BUDGET: usize = 64;
pub const PRIME_FLOOR: u64 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrreducibilityVerdict {
    Irreducible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub polynomial: IntPoly,
    pub primes: Vec<u64>,
    /// Sorted irreducible-factor degrees of the image modulo each prime.
    pub patterns: Vec<Vec<usize>>,
    /// Degrees of possible rational factors surviving every pattern.
    pub surviving_degrees: Vec<usize>,
    pub verdict: IrreducibilityVerdict,
}

/// Subset sums of a degree multiset.
pub fn achievable_degrees(pattern: &[usize]) -> BTreeSet<usize> {
    let total: usize = pattern.iter().sum();
    let mut can = vec![false; total + 1];
    can[0] = true;
    for &d in pattern {
        for s in (d..=total).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    (0..=total).filter(|&s| can[s]).collect()
}

/// Certify that `f` (primitive, squarefree over `Q`, degree >= 1) is
/// irreducible over `Q`. Only primes `p > 2^30` with `p` not dividing the
/// leading coefficient and `f mod p` squarefree are used; a rational factor
/// of degree `k` would make `k` a subset sum of every such pattern.
pub fn certify_irreducible(f: &IntPoly, budget: usize) -> IrreducibilityCertificate {
    let n = f.deg();
    let mut cert = IrreducibilityCertificate {
        polynomial: f.clone(),
        primes: Vec::new(),
        patterns: Vec::new(),
        surviving_degrees: (0..=n).collect(),
        verdict: IrreducibilityVerdict::Inconclusive,
    };
    if n == 0 || f.is_zero() {
        return cert;
    }
    if n == 1 {
        cert.surviving_degrees = vec![0, 1];
        cert.verdict = IrreducibilityVerdict::Irreducible;
        return cert;
    }
    let mut alive: BTreeSet<usize> = (0..=n).collect();
    let mut candidate = PRIME_FLOOR;
    // Bound the scan so a pathological input cannot loop forever.
    let mut scanned = 0usize;
    while cert.primes.len() < budget && scanned < 50 * budget + 100 {
        candidate += 1;
        if !is_prime_u64(candidate) {
            continue;
        }
        scanned += 1;
        let p = candidate;
        if (f.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = f.reduce_mod(p);
        if !fp.is_squarefree() {
            continue;
        }
        let pattern = degree_pattern(&fp.monic());
        let sums = achievable_degrees(&pattern);
        alive = alive.intersection(&sums).cloned().collect();
        cert.primes.push(p);
        cert.patterns.push(pattern);
        if alive.len() == 2 {
            break;
        }
    }
    cert.surviving_degrees = alive.iter().cloned().collect();
    if cert.surviving_degrees == [0, n] {
        cert.verdict = IrreducibilityVerdict::Irreducible;
    }
    cert
}
