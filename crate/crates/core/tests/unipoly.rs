use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pscert_core::exactnum::PrimeFieldElem;
use pscert_core::unipoly::factor::expand_factors;
use pscert_core::unipoly::{
    certify_irreducible, factor_mod_p, poly_gcd, resultant, ExactPoly, FpPoly, IntPoly, IrreducibilityVerdict, RatPoly,
    Scalar,
};

fn rat_poly(v: &[i64]) -> RatPoly {
    RatPoly::from_i64s(v, &())
}

fn q(f: &RatPoly) -> ExactPoly {
    ExactPoly::Q(f.clone())
}

fn random_ints(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if v[deg] == 0 {
        v[deg] = 1;
    }
    v
}

fn monic_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    match poly_gcd(&q(f), &q(g)).unwrap() {
        ExactPoly::Q(h) => h.monic(),
        other => panic!("unexpected ring {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_divided_by_factor(
        f in prop::collection::vec(-50i64..50, 1..31),
        g in prop::collection::vec(-50i64..50, 1..31),
    ) {
        let f = rat_poly(&f);
        let g = rat_poly(&g);
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_div(&g), Some(f));
    }

    #[test]
    fn gcd_divides_and_scales(
        f in prop::collection::vec(-9i64..9, 1..9),
        g in prop::collection::vec(-9i64..9, 1..9),
        h in prop::collection::vec(-9i64..9, 2..6),
    ) {
        let (f, g, h) = (rat_poly(&f), rat_poly(&g), rat_poly(&h));
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let d = monic_gcd(&f, &g);
        prop_assert!(d.divides(&f) && d.divides(&g));
        let dh = monic_gcd(&f.mul(&h), &g.mul(&h));
        prop_assert_eq!(dh, d.mul(&h).monic());
    }
}

fn all_polys(max_deg: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let n = max_deg + 1;
    for code in 0..5usize.pow(n as u32) {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 5) as i64 - 2;
                c /= 5;
                d
            })
            .collect();
        if v.iter().any(|&x| x != 0) {
            out.push(v);
        }
    }
    out
}

fn resultant_matches_gcd(a: &[i64], b: &[i64]) -> bool {
    let (fa, fb) = (IntPoly::from_i64s(a), IntPoly::from_i64s(b));
    let res = resultant(&ExactPoly::Z(fa.clone()), &ExactPoly::Z(fb.clone())).unwrap();
    let res_zero = match res {
        Scalar::Z(r) => r.is_zero(),
        other => panic!("unexpected scalar {other:?}"),
    };
    // a constant has zero resultant only against the zero polynomial, which is excluded
    let common = fa.gcd(&fb).deg() >= 1;
    res_zero == common
}

#[test]
fn resultant_vanishes_iff_common_factor_up_to_cubics() {
    let polys = all_polys(3);
    let mut checked = 0usize;
    for a in &polys {
        for b in &polys {
            assert!(resultant_matches_gcd(a, b), "{a:?} {b:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 624 * 624);
}

#[test]
fn resultant_vanishes_iff_common_factor_quartic_sample() {
    let polys = all_polys(4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40_000 {
        let a = &polys[rng.gen_range(0..polys.len())];
        let b = &polys[rng.gen_range(0..polys.len())];
        assert!(resultant_matches_gcd(a, b), "{a:?} {b:?}");
    }
    // forced common factors
    for _ in 0..2_000 {
        let h = random_ints(&mut rng, 1, 2);
        let a = IntPoly::from_i64s(&random_ints(&mut rng, 3, 2)).mul(&IntPoly::from_i64s(&h));
        let b = IntPoly::from_i64s(&random_ints(&mut rng, 3, 2)).mul(&IntPoly::from_i64s(&h));
        assert_eq!(a.resultant(&b), BigInt::from(0));
    }
}

fn fp(v: &[i64], p: u64) -> FpPoly {
    FpPoly::from_i64s(v, &p)
}

fn x_pow_p_pow(q: &FpPoly, d: usize) -> FpPoly {
    let p = *q.ctx();
    let mut h = FpPoly::x(&p).rem(q);
    for _ in 0..d {
        h = h.pow_mod(&[p], q);
    }
    h
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut l = 2;
    while l * l <= n {
        if n.is_multiple_of(l) {
            out.push(l);
            while n.is_multiple_of(l) {
                n /= l;
            }
        }
        l += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Trial division by every monic polynomial of degree <= deg/2 (tiny p only).
fn irreducible_by_search(f: &FpPoly) -> bool {
    let p = *f.ctx();
    let d = f.deg();
    for k in 1..=d / 2 {
        for code in 0..(p as usize).pow(k as u32) {
            let mut c = code;
            let mut v: Vec<i64> = (0..k)
                .map(|_| {
                    let r = (c % p as usize) as i64;
                    c /= p as usize;
                    r
                })
                .collect();
            v.push(1);
            if fp(&v, p).divides(f) {
                return false;
            }
        }
    }
    true
}

#[test]
fn factor_mod_p_roundtrip_and_frobenius() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for &p in &[3u64, 5, 7, 101, 65537, 1_000_000_007] {
        for _ in 0..40 {
            let deg = rng.gen_range(1..=12);
            let mut f = fp(&random_ints(&mut rng, deg, 1000), p);
            if rng.gen_bool(0.3) {
                // repeated factors
                let g = fp(&random_ints(&mut rng, 2, 1000), p);
                f = f.mul(&g.pow(2));
            }
            if f.deg() == 0 {
                continue;
            }
            let factors = factor_mod_p(&f);
            assert_eq!(expand_factors(&factors, p), f.monic(), "p={p} f={f}");
            for (qf, _) in &factors {
                let d = qf.deg();
                let x = FpPoly::x(&p).rem(qf);
                assert_eq!(x_pow_p_pow(qf, d), x, "p={p} q={qf}");
                for l in prime_factors(d) {
                    assert_ne!(x_pow_p_pow(qf, d / l), x, "p={p} q={qf}");
                }
                if p <= 7 && d <= 6 {
                    assert!(irreducible_by_search(qf), "p={p} q={qf}");
                }
            }
        }
    }
}

#[test]
fn factor_mod_p_small_examples() {
    // x^2 + x + 1 mod 5 has no roots: 5 = 2 mod 3
    let f = fp(&[1, 1, 1], 5);
    assert_eq!(factor_mod_p(&f), vec![(f.clone(), 1)]);
    // mod 7 it splits as (x - 2)(x - 4)
    let f7 = factor_mod_p(&fp(&[1, 1, 1], 7));
    assert_eq!(f7.len(), 2);
    assert!(f7.iter().all(|(q, m)| q.deg() == 1 && *m == 1));
    let root = |q: &FpPoly| q.coeff(0).neg();
    let mut roots: Vec<u64> = f7.iter().map(|(q, _)| root(q).residue()).collect();
    roots.sort_unstable();
    assert_eq!(roots, vec![2, 4]);
    assert_eq!(PrimeFieldElem::new(2, 7).pow(3).residue(), 1);
}

#[test]
fn certify_irreducible_rejects_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for _ in 0..1000 {
        let da = rng.gen_range(1..=5);
        let db = rng.gen_range(1..=5);
        let a = IntPoly::from_i64s(&random_ints(&mut rng, da, 20));
        let b = IntPoly::from_i64s(&random_ints(&mut rng, db, 20));
        let f = a.mul(&b);
        let cert = certify_irreducible(&f, 12);
        assert_eq!(cert.verdict, IrreducibilityVerdict::Inconclusive, "{a} * {b}");
        assert!(cert.surviving_degrees.len() > 2);
    }
}

#[test]
fn certify_irreducible_examples() {
    use pscert_core::powersum::build_pq;
    let q8 = build_pq(8).unwrap().q_primitive();
    assert_eq!(q8.deg(), 6);
    assert_eq!(certify_irreducible(&q8, 12).verdict, IrreducibilityVerdict::Irreducible);
    let q9 = build_pq(9).unwrap().q_primitive();
    assert_eq!((q9.deg(), q9.lc()), (6, BigInt::from(3)));
    assert_eq!(certify_irreducible(&q9, 12).verdict, IrreducibilityVerdict::Irreducible);
    assert_ne!(certify_irreducible(&IntPoly::from_i64s(&[-1, 0, 1]), 12).verdict, IrreducibilityVerdict::Irreducible);
}

#[test]
fn rational_ring_mismatch_is_an_error() {
    let f = ExactPoly::Q(rat_poly(&[1, 1]));
    let g = ExactPoly::Fp(fp(&[1, 1], 5));
    assert!(poly_gcd(&f, &g).is_err());
    assert!(resultant(&f, &g).is_err());
}
