//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{fix_distance_log2, roots_fixed, FixC, C64};
use pscert_core::analytic::*;
use pscert_core::criteria::{normal4, roots_of_unity_case, unity_equations_hold, CriterionWitness, UnityCase};
use pscert_core::exactnum::{ComplexBox, PrecisionPolicy, RealInterval, UnityRoot};
use pscert_core::membership::{graded_membership, power_sum, zerodivisor_form, MultiPoly};
use pscert_core::pipeline::{
    certify_a1, certify_a1_with, certify_general_bounds, certify_mod_p, certify_pair, certify_triple, replay,
    run_sweep, Certificate, Outcome, SweepFilter, SweepMode, SweepSpec,
};
use pscert_core::powersum::{build_pq, c_poly, pair_zset, regseq3_mod_p, regseq3_rational, Regularity};
use pscert_core::unipoly::irreducible::DEFAULT_PRIME_BUDGET;
use pscert_core::unipoly::{certify_irreducible, IntPoly, IrreducibilityVerdict};

type Outcome_ = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.1?}, limit {limit:?}"))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let den = BigInt::from(10).pow(frac.len() as u32);
    BigRational::new(format!("{int}{frac}").parse::<BigInt>().unwrap(), den)
}

fn int_output(cert: &Certificate, op: &str, name: &str) -> Option<BigInt> {
    match cert.step(op)?.output(name)? {
        Value::Integer(s) => s.parse().ok(),
        _ => None,
    }
}

fn interval_output(cert: &Certificate, op: &str, name: &str) -> Option<RealInterval> {
    match cert.step(op)?.output(name)? {
        Value::Interval(i) => Some(i.clone()),
        _ => None,
    }
}

fn trivial_factor_law() -> Outcome_ {
    let start = Instant::now();
    let w = IntPoly::from_i64s(&[1, 1, 1]);
    let z = IntPoly::from_i64s(&[0, 1, 1]);
    for n in 2..=200u32 {
        let d = build_pq(n).map_err(|e| e.to_string())?;
        ensure(d.c.mul(&d.q) == d.p, format!("C_{n} Q_{n} != P_{n}"))?;
        ensure(d.q_degree() % 6 == 0, format!("deg Q_{n} = {}", d.q_degree()))?;
        let row = match n % 6 {
            0 => IntPoly::one(),
            1 => z.mul(&w.pow(2)),
            2 => w.clone(),
            3 => z.clone(),
            4 => w.pow(2),
            _ => z.mul(&w),
        };
        ensure(d.c == row && c_poly(n) == row, format!("C_{n} does not match its table row"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("199 exact factorizations".into())
}

fn pair_sweep() -> Outcome_ {
    let start = Instant::now();
    let mut pairs = 0;
    for b in 2..=60u32 {
        for c in b + 1..=60 {
            let zs = pair_zset(b, c).map_err(|e| e.to_string())?;
            ensure(zs.nontrivial_empty(), format!("gcd(Q_{b}, Q_{c}) = {}", zs.defining))?;
            let prod = b * c;
            ensure(zs.trivial.zero_minus_one == (prod % 2 == 1), format!("({b},{c}) zero/-1 flag"))?;
            ensure(zs.trivial.cube_roots == (prod % 3 != 0), format!("({b},{c}) cube-root flag"))?;
            pairs += 1;
        }
    }
    // numeric cross-check with roots to ~2^-200. Distinct roots of different
    // Q_n can agree to 1e-22 (Q_36, Q_60), so matching uses 2^-150, not 1e-6.
    let roots: Vec<Vec<FixC>> =
        (0..=60u32).map(|n| if n < 2 { Vec::new() } else { roots_fixed(build_pq(n).unwrap().q.coeffs()) }).collect();
    for n in 2..=60usize {
        let r = &roots[n];
        ensure(r.len() == build_pq(n as u32).unwrap().q_degree(), format!("root count for Q_{n}"))?;
        for i in 0..r.len() {
            for j in 0..i {
                ensure(fix_distance_log2(&r[i], &r[j]) > -40.0, format!("Q_{n} roots not separated"))?;
            }
        }
    }
    let min_log2 = |b: usize, c: usize| {
        let mut m = f64::INFINITY;
        for x in &roots[b] {
            for y in &roots[c] {
                m = m.min(fix_distance_log2(x, y));
            }
        }
        m
    };
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let mut sample = Vec::new();
    while sample.len() < 20 {
        let b = rng.gen_range(2..60usize);
        let c = rng.gen_range(b + 1..=60);
        if !sample.contains(&(b, c)) {
            sample.push((b, c));
        }
    }
    for &(b, c) in &sample {
        ensure(min_log2(b, c) > -150.0, format!("sampled pair ({b},{c})"))?;
    }
    let mut near_misses = Vec::new();
    for b in 2..=60usize {
        for c in b + 1..=60 {
            let m = min_log2(b, c);
            ensure(m > -150.0, format!("Q_{b}, Q_{c} share a numeric root"))?;
            if m < 1e-6f64.log2() {
                near_misses.push(format!("({b},{c})"));
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{pairs} exact gcds constant; numeric roots separate every pair (20 sampled + all); \
         {} pairs have distinct roots closer than 1e-6",
        near_misses.len()
    ))
}

fn b8_certificate() -> Outcome_ {
    let start = Instant::now();
    let roots = isolate_segment_roots(8, &rat(1, 1_000_000_000_000)).map_err(|e| e.to_string())?;
    let t = roots.first().ok_or("no segment root for b = 8")?.t.clone();
    let t_ref = 2.513228157188;
    ensure((t.lo_f64() - t_ref).abs() < 1e-9 && (t.hi_f64() - t_ref).abs() < 1e-9, format!("t = {t}"))?;

    let cert = certify_a1(8).map_err(|e| e.to_string())?;
    ensure(cert.conclusion.outcome == Outcome::Empty, format!("b = 8 concluded {}", cert.conclusion.outcome))?;
    let c_lo = int_output(&cert, "c_small_threshold", "c_lo").ok_or("no c_lo")?;
    ensure(c_lo >= BigInt::from(2500), format!("c_lo = {c_lo}"))?;
    let c_max = int_output(&cert, "lmn3_c_max", "c_max").ok_or("no c_max")?;
    ensure(c_max >= BigInt::from(4_500_000) && c_max <= BigInt::from(5_500_000), format!("c_max = {c_max}"))?;
    let scan = cert.step("close_window").ok_or("no window scan")?;
    ensure(scan.verdict == Verdict::Satisfied, "window scan did not close")?;
    let period = interval_output(&cert, "close_window", "pi_over_theta").ok_or("no period")?;
    // the printed digits are truncated ("5840.32375784959..."): the enclosure
    // must lie within 1e-8 of them and meet [v, v + 1e-11]
    let v = decimal("5840.32375784959");
    let (lo, hi) = (period.lo().to_rational(), period.hi().to_rational());
    let tol = decimal("0.00000001");
    ensure(lo >= &v - &tol && hi <= &v + &tol, format!("period {period}"))?;
    ensure(hi >= v && lo <= &v + decimal("0.00000000001"), format!("period {period} misses the printed digits"))?;
    ensure(period.width_f64() < 1e-8, format!("period width {}", period.width_f64()))?;
    let (m_lo, m_hi) = match (int_output(&cert, "close_window", "m_lo"), int_output(&cert, "close_window", "m_hi")) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err("no m range".into()),
    };
    let m_count = &m_hi - &m_lo + 1;
    ensure(m_count <= BigInt::from(1000), format!("{m_count} values of m"))?;
    ensure(replay(&cert).map_err(|e| e.to_string())?.ok(), "b = 8 certificate does not replay")?;
    within(start, Duration::from_secs(60))?;

    let mut margins = Vec::new();
    for b in [10u64, 11, 13] {
        let c = certify_a1(b).map_err(|e| e.to_string())?;
        ensure(c.is_conclusive(), format!("b = {b} undecided"))?;
        let lo = int_output(&c, "c_small_threshold", "c_lo").map(|v| v.to_string()).unwrap_or("-".into());
        let hi = int_output(&c, "lmn3_c_max", "c_max").map(|v| v.to_string()).unwrap_or("-".into());
        margins.push(format!("b={b} {} c_lo={lo} c_max={hi}", c.conclusion.outcome));
    }
    Ok(format!(
        "t={:.12}, c_lo={c_lo}, c_max={c_max}, pi/|theta|={:.11}, {m_count} m values; {}",
        t.mid_f64(),
        period.mid_f64(),
        margins.join("; ")
    ))
}

fn constant_at_14_9() -> Outcome_ {
    let r = RealInterval::from_rational(&rat(14, 9), 128);
    let rep = bound_14_9_at_modulus(&r);
    ensure(rep.value.lo_f64() > 0.4885 && rep.value.hi_f64() < 0.4890, format!("value {}", rep.value))?;
    ensure(rep.verdict == Verdict::Satisfied, "not certified below 1/2")?;
    ensure(rep.value.certainly_lt(&RealInterval::from_rational(&rat(1, 2), 128)), "not below 1/2")?;
    Ok(format!("{:.6} < 1/2", rep.value.mid_f64()))
}

fn irreducibility() -> Outcome_ {
    let start = Instant::now();
    let mut certified = 0;
    for b in 6..=42u32 {
        let q = build_pq(b).unwrap().q_primitive();
        if q.deg() == 0 {
            continue;
        }
        let cert = certify_irreducible(&q, DEFAULT_PRIME_BUDGET);
        ensure(cert.verdict == IrreducibilityVerdict::Irreducible, format!("Q_{b} not certified"))?;
        certified += 1;
    }
    let q9 = build_pq(9).unwrap().q_primitive();
    ensure((q9.deg(), q9.lc()) == (6, BigInt::from(3)), format!("Q_9 primitive: {q9}"))?;
    let q15 = build_pq(15).unwrap().q_primitive();
    ensure((q15.deg(), q15.lc()) == (12, BigInt::from(15)), format!("Q_15 primitive: {q15}"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("{certified} polynomials irreducible; Q_9 (deg 6, lc 3), Q_15 (deg 12, lc 15)"))
}

fn max_modulus_thresholds() -> Outcome_ {
    let w = rat(1, 100_000_000);
    let mut least = f64::INFINITY;
    for b in 17..=42u32 {
        let m = max_modulus(b, &w).map_err(|e| e.to_string())?;
        ensure(m.lo_f64() >= 2.72, format!("b={b}: {m}"))?;
        least = least.min(m.lo_f64());
    }
    let mut least_small = f64::INFINITY;
    for b in [12u32, 14, 16] {
        let m = max_modulus(b, &w).map_err(|e| e.to_string())?;
        ensure(m.lo_f64() >= 3.83, format!("b={b}: {m}"))?;
        least_small = least_small.min(m.lo_f64());
    }
    Ok(format!("min over 17..42 = {least:.6}, min over 12,14,16 = {least_small:.6}"))
}

fn finite_field() -> Outcome_ {
    let start = Instant::now();
    let v = regseq3_mod_p(1, 6, 100, 4_594_399).map_err(|e| e.to_string())?;
    ensure(v.verdict == Regularity::NotRegular, "(1,6,100) mod 4594399")?;
    ensure(regseq3_rational(1, 6, 100).unwrap().verdict == Regularity::Regular, "(1,6,100) over Q")?;
    ensure(regseq3_mod_p(1, 2, 3, 5).unwrap().verdict == Regularity::Regular, "(1,2,3) mod 5")?;
    within(start, Duration::from_secs(120))?;
    Ok("mod 4594399 not regular, over Q regular, (1,2,3) mod 5 regular".into())
}

fn member(target: &MultiPoly, gens: &[MultiPoly]) -> Result<bool, String> {
    let ans = graded_membership(target, gens).map_err(|e| e.to_string())?;
    if ans.member {
        let sum =
            ans.cofactors.iter().zip(gens).fold(MultiPoly::zero(target.nvars()), |acc, (h, g)| acc.add(&h.mul(g)));
        ensure(&sum == target, "cofactors do not re-expand to the target")?;
    }
    Ok(ans.member)
}

fn membership_suite() -> Outcome_ {
    let start = Instant::now();
    let p = power_sum;
    ensure(member(&p(4, 5), &[p(4, 1), p(4, 2)])?, "p5 in (p1,p2), n=4")?;
    ensure(member(&p(4, 5), &[p(4, 1), p(4, 3)])?, "p5 in (p1,p3), n=4")?;
    ensure(member(&p(3, 2).pow(2), &[p(3, 1), p(3, 4)])?, "p2^2 in (p1,p4), n=3")?;
    ensure(member(&zerodivisor_form(2), &[p(4, 2), p(4, 8)])?, "degree-8 form in (p2,p8), n=4")?;
    ensure(!member(&p(3, 5), &[p(3, 2), p(3, 3)])?, "p5 should not lie in (p2,p3), n=3")?;
    within(start, Duration::from_secs(60))?;
    Ok("4 memberships with verified cofactors, 1 non-membership".into())
}

fn unit(r: UnityRoot) -> C64 {
    let t = 2.0 * std::f64::consts::PI * r.exponent() as f64 / r.order() as f64;
    C64::new(t.cos(), t.sin())
}

fn float_equations(a: u64, b: u64, roots: &[UnityRoot]) -> bool {
    let one = C64::new(1.0, 0.0);
    roots.iter().all(|&r| (unit(r).powi((b - a) as u32) - one).abs() < 1e-9)
        && roots.iter().fold(one, |acc, &r| acc + unit(r).powi(a as u32)).abs() < 1e-9
}

fn criteria_brute_force() -> Outcome_ {
    let start = Instant::now();
    let mut tuples_checked = 0usize;
    for b in 2..=12u64 {
        for a in 1..b {
            let d = b - a;
            for case in [UnityCase::One, UnityCase::Two, UnityCase::Three] {
                let k = case.arity();
                let mut found = false;
                for code in 0..d.pow(k as u32) {
                    let t: Vec<UnityRoot> =
                        (0..k).map(|i| UnityRoot::new(d, ((code / d.pow(i as u32)) % d) as i64)).collect();
                    let exact = unity_equations_hold(case, a, b, &t);
                    ensure(exact == float_equations(a, b, &t), format!("{case:?} ({a},{b}) {t:?}"))?;
                    found |= exact;
                    tuples_checked += 1;
                }
                let r = roots_of_unity_case(case, a, b).map_err(|e| e.to_string())?;
                ensure(r.holds == found, format!("{case:?} ({a},{b}): predicate {} vs search {found}", r.holds))?;
                if let Some(CriterionWitness::Unity(w)) = &r.witness {
                    ensure(unity_equations_hold(case, a, b, w), format!("{case:?} ({a},{b}) witness"))?;
                }
            }
        }
    }
    for b in 2..=200 {
        ensure(normal4(1, b).unwrap().holds == (b % 2 == 0), format!("normal4(1, {b})"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{tuples_checked} tuples enumerated; normal4(1, b) is the parity of b up to 200"))
}

fn general_bound_functions() -> Outcome_ {
    let g1 = general_bounds(2, ParityProfile::ExactlyOneEven, None, 128).map_err(|e| e.to_string())?;
    let g2 = general_bounds(2, ParityProfile::Other, None, 128).map_err(|e| e.to_string())?;
    ensure(g1.b_bound == 2400 && g2.b_bound == 9600, format!("b bounds {} / {}", g2.b_bound, g1.b_bound))?;
    let (e20, e80) = ((1.0f64 / 20.0).exp(), (1.0f64 / 80.0).exp());
    ensure(g1.r_lower.lo_f64() <= e20 && e20 <= g1.r_lower.hi_f64(), format!("r lower {}", g1.r_lower))?;
    ensure(g2.r_lower.lo_f64() <= e80 && e80 <= g2.r_lower.hi_f64(), format!("r lower {}", g2.r_lower))?;
    let mut brackets = Vec::new();
    for prec in [128u32, 256, 512] {
        let r = RealInterval::from_rational(&rat(105, 100), prec);
        let rep = final_proof_2_c_max(2, 7, &r).map_err(|e| e.to_string())?;
        ensure(rep.verdict == Verdict::Satisfied, format!("bracket undecided at {prec} bits"))?;
        brackets.push(rep.input("c_max").cloned().ok_or("no c_max")?);
    }
    ensure(brackets.windows(2).all(|w| w[0] == w[1]), "bracket moved under precision doubling")?;
    let c = match &brackets[0] {
        Value::Integer(s) => s.clone(),
        other => format!("{other:?}"),
    };
    Ok(format!("b bounds 9600 / 2400, r bounds exp(1/80) / exp(1/20), c_max(2, 7, 1.05) = {c}"))
}

fn sweep_spec(mode: SweepMode, max: u64, dir: &std::path::Path) -> SweepSpec {
    SweepSpec {
        mode,
        min: 2,
        max,
        filter: SweepFilter::default(),
        triples: Vec::new(),
        primes: Vec::new(),
        threads: None,
        output_dir: Some(dir.to_path_buf()),
    }
}

fn read_dir_bytes(dir: &std::path::Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    v.sort();
    v
}

fn verdict_pairs(prec: u32) -> Result<Vec<(String, Verdict)>, String> {
    let e = |x: pscert_core::error::AnalyticError| x.to_string();
    let r149 = RealInterval::from_rational(&rat(14, 9), prec);
    let r8 = max_modulus(8, &rat(1, 1 << 40)).map_err(e)?.with_prec(prec);
    let c8 = c_small_threshold(&r8, 8);
    let c43 = c_small_threshold(&r149, 43);
    let roots = isolate_segment_roots(8, &rat(1, 1 << 40)).map_err(e)?;
    let mut reps = vec![
        bound_14_9_at_modulus(&r149),
        c8.clone(),
        c43.clone(),
        lmn3_c_max(8, prec).map_err(e)?,
        lmn3_inequality(43, &c43.value).map_err(e)?,
        close_window(8, &roots[0], 2920, 4_947_180, prec).map_err(e)?.report,
        final_proof_1_check(&RealInterval::from_rational(&rat(105, 100), prec), 40).map_err(e)?,
        final_proof_2_c_max(2, 7, &RealInterval::from_rational(&rat(105, 100), prec)).map_err(e)?,
        root_of_unity_exclusion(100, &r149).map_err(e)?,
        ten_delta_check(
            &ComplexBox::new(RealInterval::from_ratio(-1, 2, prec), RealInterval::from_ratio(87, 100, prec)),
            &RealInterval::from_ratio(1, 100, prec),
        )
        .map_err(e)?,
    ];
    for profile in [ParityProfile::ExactlyOneEven, ParityProfile::Other] {
        reps.extend(general_bounds(2, profile, Some(7), prec).map_err(e)?.reports);
    }
    Ok(reps.into_iter().map(|r| (r.name, r.verdict)).collect())
}

fn property_gates() -> Outcome_ {
    for (mode, max) in [(SweepMode::PairA1, 30), (SweepMode::Triple, 8)] {
        let (one, many) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        let a = run_sweep(&sweep_spec(mode, max, one.path()), Some(1)).map_err(|e| e.to_string())?;
        let b = run_sweep(&sweep_spec(mode, max, many.path()), Some(8)).map_err(|e| e.to_string())?;
        ensure(a == b, format!("{mode:?} summaries differ"))?;
        ensure(read_dir_bytes(one.path()) == read_dir_bytes(many.path()), format!("{mode:?} files differ"))?;
    }
    let mut reports = 0;
    for prec in [128u32, 256] {
        let (x, y) = (verdict_pairs(prec)?, verdict_pairs(prec * 2)?);
        ensure(x == y, format!("verdicts changed between {prec} and {} bits", prec * 2))?;
        reports = x.len();
    }
    let certs = [
        certify_a1(8),
        certify_a1(9),
        certify_a1(12),
        certify_a1_with(8, PrecisionPolicy::default().with_cap(16)),
        certify_pair(6, 10),
        certify_pair(5, 7),
        certify_triple(2, 3, 5),
        certify_mod_p(1, 6, 100, 4_594_399),
        certify_general_bounds(2, Some(7), PrecisionPolicy::default()),
    ];
    for c in &certs {
        let c = c.as_ref().map_err(|e| e.to_string())?;
        let rep = replay(c).map_err(|e| e.to_string())?;
        ensure(rep.ok(), format!("{} certificate does not replay: {:?}", c.kind, rep.mismatches))?;
    }
    Ok(format!(
        "sweeps byte-identical at 1 and 8 threads; {reports} bound verdicts stable; {} certificates replay",
        certs.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome_); 11] = [
        ("trivial-factor law", trivial_factor_law),
        ("pair sweep", pair_sweep),
        ("b = 8 certificate", b8_certificate),
        ("constant at 14/9", constant_at_14_9),
        ("irreducibility", irreducibility),
        ("max-modulus thresholds", max_modulus_thresholds),
        ("finite-field check", finite_field),
        ("membership suite", membership_suite),
        ("criteria brute force", criteria_brute_force),
        ("general-case bounds", general_bound_functions),
        ("property gates", property_gates),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let t = start.elapsed();
        match &res {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({t:.1?}): {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name} ({t:.1?}): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
