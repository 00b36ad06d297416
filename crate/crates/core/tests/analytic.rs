mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pscert_core::analytic::*;
use pscert_core::exactnum::transcendental::pi;
use pscert_core::exactnum::{ComplexBox, Dyadic, RealInterval};
use pscert_core::powersum::build_pq;

fn width(e: u32) -> BigRational {
    BigRational::new(1.into(), BigInt::from(10).pow(e))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn count_law_up_to_60() {
    for n in 6..=60 {
        let deg = build_pq(n).unwrap().q_degree();
        let roots = isolate_segment_roots(n, &width(6)).unwrap();
        assert_eq!(roots.len(), deg / 6, "n={n}");
    }
}

#[test]
fn segment_roots_match_float_oracle() {
    for n in [8, 9, 12, 13, 16, 20, 24, 30] {
        let roots = isolate_segment_roots(n, &width(10)).unwrap();
        let oracle = common::segment_ts_float(n);
        assert_eq!(roots.len(), oracle.len(), "n={n}");
        for (r, t) in roots.iter().zip(&oracle) {
            assert!((r.t.mid_f64() - t).abs() < 1e-6, "n={n}: {} vs {t}", r.t.mid_f64());
        }
    }
}

#[test]
fn orbit_boxes_contain_roots() {
    for n in 6..=30 {
        let q = build_pq(n).unwrap().q;
        for root in isolate_segment_roots(n, &width(20)).unwrap() {
            assert!(root.t.lo() > &Dyadic::from_f64(0.8660254));
            assert_eq!(root.orbit.len(), 6);
            for b in &root.orbit {
                assert!(b.eval_int_poly(q.coeffs()).contains_zero(), "n={n}");
            }
            // P_n vanishes on the primary box too
            let p = build_pq(n).unwrap().p;
            assert!(root.alpha().eval_int_poly(p.coeffs()).contains_zero());
            // opposite exact signs at the u-bracket ends (or an exact root)
            let (lo, hi) = (root.u.lo().to_rational(), root.u.hi().to_rational());
            let (slo, shi) = (root.qu.eval_rational(&lo), root.qu.eval_rational(&hi));
            assert!(lo == hi || (slo * shi) < BigRational::from_integer(0.into()));
        }
    }
}

#[test]
fn max_modulus_examples() {
    let m = max_modulus(8, &width(12)).unwrap();
    assert!(m.lo_f64() >= 2.5624 && m.hi_f64() <= 2.5626);
    assert!((m.mid_f64() - common::max_modulus_float(8)).abs() < 1e-8);
    for n in 17..=42 {
        let m = max_modulus(n, &width(8)).unwrap();
        assert!(m.lo_f64() >= 2.72, "n={n}: {m}");
        assert!((m.mid_f64() - common::max_modulus_float(n)).abs() < 1e-5, "n={n}");
    }
    for n in [12, 14, 16] {
        assert!(max_modulus(n, &width(8)).unwrap().lo_f64() >= 3.83, "n={n}");
    }
    let m6 = max_modulus(6, &width(8)).unwrap();
    assert!(RealInterval::from_rational(&rat(14, 9), 64).certainly_lt(&m6));
}

#[test]
fn width_cap() {
    assert!(matches!(
        isolate_segment_roots_with(8, &width(40), 64),
        Err(pscert_core::error::AnalyticError::WidthUnreachable(64))
    ));
    assert!(isolate_segment_roots(7, &width(10)).unwrap().is_empty());
}

#[test]
fn c_small_examples() {
    let r8 = max_modulus(8, &width(20)).unwrap();
    let rep = c_small_threshold(&r8, 8);
    assert_eq!(rep.verdict, Verdict::Satisfied);
    assert!(rep.value.lo_f64() >= 2500.0);
    let r = RealInterval::from_rational(&rat(14, 9), 128);
    assert!(c_small_threshold(&r, 43).value.lo_f64() > 1e6);
    let r = RealInterval::from_rational(&rat(272, 100), 128);
    let v = c_small_threshold(&r, 17).value;
    assert!(v.lo_f64() >= std::f64::consts::FRAC_PI_2 * 2.72f64.powi(17) * (1.0 - 1e-12));
}

#[test]
fn lmn3_contradictions() {
    // b >= 43 at r = 14/9; 17..42 at 2.72; 12, 14, 16 at 3.83
    let cases: Vec<(u64, BigRational)> = (43..=60)
        .map(|b| (b, rat(14, 9)))
        .chain((17..=42).map(|b| (b, rat(272, 100))))
        .chain([12, 14, 16].into_iter().map(|b| (b, rat(383, 100))))
        .collect();
    for (b, r) in cases {
        let r = RealInterval::from_rational(&r, 128);
        let c = c_small_threshold(&r, b).value;
        let rep = lmn3_inequality(b, &c).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated, "b={b}");
    }
}

#[test]
fn lmn_lower_matches_b8_instance() {
    let r = max_modulus(8, &width(20)).unwrap();
    let h = height_bound_a1(8, &r).unwrap();
    assert_eq!(h.d, 6);
    let expected = std::f64::consts::LN_2 + 8.0 / 3.0 * r.mid_f64().ln();
    assert!((h.dh.mid_f64() - expected).abs() < 1e-12);
    let v = lmn_lower_dh(h.d, &h.dh, 5000).unwrap();
    assert!(v.is_positive());
}

#[test]
fn window_b8_closes() {
    let roots = isolate_segment_roots(8, &width(40)).unwrap();
    let scan = close_window(8, &roots[0], 2500, 5_000_000, 256).unwrap();
    assert_eq!(scan.report.verdict, Verdict::Satisfied);
    // theta oracle
    let t = common::segment_ts_float(8)[0];
    let z = common::C64::new(-0.5, t);
    let w = common::C64::new(1.0, 0.0) + common::C64::new(1.0, 0.0) / z.powi(8);
    assert!((scan.theta.mid_f64() - w.arg()).abs() < 1e-12);
    let m1 = scan.period.mid_f64() - 5840.0;
    assert!((m1 - 0.3238).abs() < 1e-4);
}

#[test]
fn verdicts_stable_under_precision_doubling() {
    for prec in [128u32, 256] {
        let p2 = prec * 2;
        let r = RealInterval::from_rational(&rat(14, 9), prec);
        let r2 = r.with_prec(p2);
        assert_eq!(bound_14_9_at_modulus(&r).verdict, bound_14_9_at_modulus(&r2).verdict);
        assert_eq!(c_small_threshold(&r, 43).verdict, c_small_threshold(&r2, 43).verdict);
        assert_eq!(lmn3_c_max(8, prec).unwrap().input("c_max"), lmn3_c_max(8, p2).unwrap().input("c_max"));
        let c = c_small_threshold(&r, 43).value;
        assert_eq!(lmn3_inequality(43, &c).unwrap().verdict, lmn3_inequality(43, &c.with_prec(p2)).unwrap().verdict);
        assert_eq!(
            root_of_unity_exclusion(100, &r).unwrap().verdict,
            root_of_unity_exclusion(100, &r2).unwrap().verdict
        );
    }
}

#[test]
fn monotone_bounds_on_grid() {
    let mut prev = lmn3_c_max(6, 128).unwrap().value;
    for b in 7..=20 {
        let v = lmn3_c_max(b, 128).unwrap().value;
        assert!(prev.certainly_lt(&v), "b={b}");
        prev = v;
    }
    let rs = [rat(16, 10), rat(2, 1), rat(272, 100), rat(383, 100)];
    for b in [6u64, 8, 12, 20] {
        let vals: Vec<RealInterval> =
            rs.iter().map(|r| c_small_threshold(&RealInterval::from_rational(r, 128), b).value).collect();
        assert!(vals.windows(2).all(|w| w[0].certainly_lt(&w[1])));
        let next = c_small_threshold(&RealInterval::from_rational(&rs[0], 128), b + 1).value;
        assert!(vals[0].certainly_lt(&next));
    }
}

#[test]
fn ten_delta_near_omega() {
    let w = ComplexBox::new(RealInterval::from_ratio(-1, 2, 128), RealInterval::from_ratio(87, 100, 128));
    let rep = ten_delta_check(&w, &RealInterval::from_ratio(1, 100, 128)).unwrap();
    assert_eq!(rep.verdict, Verdict::Satisfied);
    let w = ComplexBox::new(RealInterval::from_ratio(-1, 2, 128), RealInterval::from_ratio(1, 2, 128));
    assert!(ten_delta_check(&w, &RealInterval::from_ratio(1, 100, 128)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn six_group_bound_monotone(a in 1u32..10_000, b in 1u32..10_000) {
        // (u - 3/4)^3 / (u + 1/4)^2 is increasing in u > 3/4
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assume!(lo < hi);
        let t = |k: u32| {
            let u = RealInterval::from_rational(&(rat(3, 4) + rat(k as i64, 1000)), 128);
            bound_14_9(&u.sqrt().unwrap()).value
        };
        prop_assert!(t(lo).certainly_lt(&t(hi)));
    }

    #[test]
    fn lmn_lower_nonincreasing_in_k(d in 1u64..8, k in 1u64..1_000_000, extra in 1u64..1_000_000) {
        let h = RealInterval::from_ratio(1, 3, 128);
        let a = lmn_lower(d, &h, k).unwrap();
        let b = lmn_lower(d, &h, k + extra).unwrap();
        prop_assert!(b.lo() <= a.hi());
    }

    #[test]
    fn final_proof_1_consistent(num in 101i64..400, c in 1u64..200) {
        let r = RealInterval::from_rational(&rat(num, 100), 128);
        let rep = final_proof_1_check(&r, c).unwrap();
        let rc = (num as f64 / 100.0).powi(c as i32);
        if rc > 3.0 + 1e-9 {
            prop_assert_eq!(rep.verdict, Verdict::Satisfied);
        } else if rc < 3.0 - 1e-9 {
            prop_assert_eq!(rep.verdict, Verdict::Undecided);
        }
    }
}

#[test]
fn pi_sanity() {
    assert!((pi(64).mid_f64() - std::f64::consts::PI).abs() < 1e-15);
}
