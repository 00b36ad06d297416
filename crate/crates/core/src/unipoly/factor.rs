//! Factorization over prime fields: squarefree decomposition, distinct-degree
//! and equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;

use super::dense::FpPoly;
use crate::exactnum::PrimeFieldElem;

fn big_pow(p: u64, d: usize) -> BigUint {
    num_traits::pow(BigUint::from(p), d)
}

fn limbs(e: &BigUint) -> Vec<u64> {
    e.to_u64_digits()
}

/// `x^(p^d) mod f` by repeated `p`-th powering.
fn frobenius_power(f: &FpPoly, d: usize) -> FpPoly {
    let p = *f.ctx();
    let mut h = FpPoly::x(&p).rem(f);
    for _ in 0..d {
        h = h.pow_mod(&[p], f);
    }
    h
}

/// The polynomial whose `p`-th power is `f` (requires `f' = 0`).
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = *f.ctx();
    let v = f.coeffs().iter().step_by(p as usize).cloned().collect();
    FpPoly::new(v, p)
}

/// `f = lc * prod g_i^{m_i}` with each `g_i` monic squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    assert!(!f.is_zero(), "decomposition of zero");
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    out
}

fn sqf_rec(f: &FpPoly, scale: usize, out: &mut Vec<(FpPoly, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = *f.ctx() as usize;
    let df = f.derivative();
    if df.is_zero() {
        sqf_rec(&pth_root(f), scale * p, out);
        return;
    }
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).expect("gcd divides");
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.exact_div(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_constant() {
        sqf_rec(&pth_root(&c), scale * p, out);
    }
}

/// Distinct-degree factorization of a monic squarefree `f`: pairs
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = *f.ctx();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = FpPoly::x(&p).rem(&rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&[p], &rest);
        let g = rest.gcd(&h.sub(&FpPoly::x(&p)));
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if !rest.is_constant() {
        let k = rest.deg();
        out.push((rest, k));
    }
    out
}

/// Split a monic squarefree product of degree-`d` irreducibles (p odd).
/// Deterministic: tries `(x + a)^((p^d - 1)/2) - 1` for a = 0, 1, 2, ...
/// and, when needed, quadratic shifts.
pub fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let p = *f.ctx();
    if f.deg() == d {
        return vec![f.monic()];
    }
    let e = (big_pow(p, d) - BigUint::one()) >> 1;
    let e = limbs(&e);
    let one = FpPoly::one(&p);
    let mut seeds: Vec<FpPoly> = Vec::new();
    for a in 0..64i64 {
        seeds.push(FpPoly::from_i64s(&[a, 1], &p));
    }
    for a in 0..32i64 {
        for b in 1..4i64 {
            seeds.push(FpPoly::from_i64s(&[a, b, 1], &p));
        }
    }
    for s in seeds {
        let t = s.pow_mod(&e, f).sub(&one);
        let g = f.gcd(&t);
        if !g.is_constant() && g.deg() < f.deg() {
            let h = f.exact_div(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&h, d));
            return out;
        }
    }
    // Exhausting every seed is essentially impossible; fall back to a
    // deterministic pseudo-random search over dense seeds.
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    loop {
        let v: Vec<PrimeFieldElem> = (0..f.deg())
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                PrimeFieldElem::new((state % p) as i128, p)
            })
            .collect();
        let s = FpPoly::new(v, p);
        if s.is_constant() {
            continue;
        }
        let g = f.gcd(&s.pow_mod(&e, f).sub(&one));
        if !g.is_constant() && g.deg() < f.deg() {
            let h = f.exact_div(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&h, d));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree then coefficients. The leading coefficient is dropped.
pub fn factor_mod_p(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    assert!(!f.is_zero(), "factorization of zero");
    assert!(*f.ctx() != 2, "p must be odd");
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(f) {
        for (part, d) in distinct_degree(&g) {
            for q in equal_degree(&part, d) {
                out.push((q, m));
            }
        }
    }
    out.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    out
}

/// Rabin's test: `q` of degree `d` is irreducible iff `x^(p^d) = x mod q`
/// and `gcd(x^(p^(d/l)) - x, q) = 1` for each prime `l | d`.
pub fn is_irreducible_mod_p(q: &FpPoly) -> bool {
    let Some(d) = q.degree() else { return false };
    if d == 0 {
        return false;
    }
    let p = *q.ctx();
    let q = q.monic();
    let x = FpPoly::x(&p).rem(&q);
    if frobenius_power(&q, d) != x {
        return false;
    }
    for l in prime_divisors(d) {
        let h = frobenius_power(&q, d / l);
        if !q.gcd(&h.sub(&x)).is_one() {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn poly_order(a: &FpPoly, b: &FpPoly) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        let ka: Vec<u64> = a.coeffs().iter().rev().map(|c| c.residue()).collect();
        let kb: Vec<u64> = b.coeffs().iter().rev().map(|c| c.residue()).collect();
        ka.cmp(&kb)
    })
}

/// Product of the factors with multiplicity.
pub fn expand_factors(factors: &[(FpPoly, usize)], p: u64) -> FpPoly {
    factors.iter().fold(FpPoly::one(&p), |acc, (q, m)| acc.mul(&q.pow(*m as u32)))
}

/// Degrees of the irreducible factors of a squarefree `f`, from its
/// distinct-degree factorization (no equal-degree splitting needed).
pub fn degree_pattern(f: &FpPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(std::iter::repeat_n(d, g.deg() / d));
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(v: &[i64], p: u64) -> FpPoly {
        FpPoly::from_i64s(v, &p)
    }

    #[test]
    fn small_factorizations() {
        let f = factor_mod_p(&fp(&[1, 0, 1], 5));
        assert_eq!(f, vec![(fp(&[2, 1], 5), 1), (fp(&[3, 1], 5), 1)]);
        let f = factor_mod_p(&fp(&[1, 1, 1], 5));
        assert_eq!(f, vec![(fp(&[1, 1, 1], 5), 1)]);
        let f = factor_mod_p(&fp(&[0, -1, 0, 1], 7));
        assert_eq!(f.len(), 3);
        assert_eq!(expand_factors(&f, 7), fp(&[0, -1, 0, 1], 7));
    }

    #[test]
    fn inseparable_powers() {
        // (x^3 + 2)^3 (x + 1)^2 over F_3: derivative of the cube vanishes
        let base = fp(&[2, 0, 0, 1], 3).pow(3).mul(&fp(&[1, 1], 3).pow(2));
        let fs = factor_mod_p(&base);
        assert_eq!(expand_factors(&fs, 3), base);
        assert!(fs.iter().all(|(q, _)| is_irreducible_mod_p(q)));
    }

    #[test]
    fn rabin_test() {
        assert!(is_irreducible_mod_p(&fp(&[1, 1, 1], 5)));
        assert!(!is_irreducible_mod_p(&fp(&[1, 1, 1], 7)));
        assert!(is_irreducible_mod_p(&fp(&[2, 1, 0, 0, 1], 3)) == (factor_mod_p(&fp(&[2, 1, 0, 0, 1], 3)).len() == 1));
    }
}
