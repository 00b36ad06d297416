//! The step dispatcher shared by certification and replay.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{nv, Step};
use crate::analytic::{
    c_small_threshold, close_window, general_bounds, isolate_segment_roots_with, lmn3_c_max, lmn3_inequality,
    NamedValue, ParityProfile, SegmentRoot, Value, Verdict,
};
use crate::criteria::{
    conjecture4_conditions, factorial_divisibility, normal4, roots_of_unity_case, CriterionResult, ExponentSet,
    UnityCase,
};
use crate::error::PipelineError;
use crate::exactnum::RealInterval;
use crate::membership::{graded_membership, parse_poly, parse_poly_list};
use crate::powersum::{
    build_pq, pair_zset, regseq2, regseq3_mod_p, regseq3_rational, triple_zset, Characteristic, RegSeqVerdict,
    Regularity, TripleZSet, TrivialZeros,
};
use crate::unipoly::irreducible::DEFAULT_PRIME_BUDGET;
use crate::unipoly::{certify_irreducible, IrreducibilityVerdict};

fn get<'a>(inputs: &'a [NamedValue], name: &str) -> Result<&'a Value, PipelineError> {
    inputs
        .iter()
        .find(|v| v.name == name)
        .map(|v| &v.value)
        .ok_or_else(|| PipelineError::Invalid(format!("missing input '{name}'")))
}

fn get_u64(inputs: &[NamedValue], name: &str) -> Result<u64, PipelineError> {
    match get(inputs, name)? {
        Value::Integer(s) => s.parse().map_err(|_| PipelineError::Invalid(format!("input '{name}' is not a u64"))),
        _ => Err(PipelineError::Invalid(format!("input '{name}' must be an integer"))),
    }
}

fn get_opt_u64(inputs: &[NamedValue], name: &str) -> Result<Option<u64>, PipelineError> {
    if inputs.iter().any(|v| v.name == name) {
        get_u64(inputs, name).map(Some)
    } else {
        Ok(None)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

fn get_rational(inputs: &[NamedValue], name: &str) -> Result<BigRational, PipelineError> {
    match get(inputs, name)? {
        Value::Rational(s) | Value::Integer(s) => {
            parse_rational(s).ok_or_else(|| PipelineError::Invalid(format!("input '{name}' is not p/q")))
        }
        _ => Err(PipelineError::Invalid(format!("input '{name}' must be rational"))),
    }
}

fn get_interval(inputs: &[NamedValue], name: &str) -> Result<RealInterval, PipelineError> {
    match get(inputs, name)? {
        Value::Interval(i) => Ok(i.clone()),
        _ => Err(PipelineError::Invalid(format!("input '{name}' must be an interval"))),
    }
}

fn get_text<'a>(inputs: &'a [NamedValue], name: &str) -> Result<&'a str, PipelineError> {
    match get(inputs, name)? {
        Value::Text(s) => Ok(s),
        _ => Err(PipelineError::Invalid(format!("input '{name}' must be text"))),
    }
}

fn get_u32(inputs: &[NamedValue], name: &str) -> Result<u32, PipelineError> {
    u32::try_from(get_u64(inputs, name)?).map_err(|_| PipelineError::Invalid(format!("input '{name}' too large")))
}

fn text(s: impl ToString) -> Value {
    Value::Text(s.to_string())
}

fn flag(b: bool) -> Value {
    text(if b { "true" } else { "false" })
}

fn json_text<T: serde::Serialize>(v: &T) -> Result<Value, PipelineError> {
    Ok(Value::Text(serde_json::to_string(v)?))
}

fn exact(holds: bool) -> Verdict {
    if holds {
        Verdict::Satisfied
    } else {
        Verdict::Violated
    }
}

fn regularity_verdict(v: &RegSeqVerdict) -> Verdict {
    match v.verdict {
        Regularity::Regular => Verdict::Satisfied,
        Regularity::NotRegular => Verdict::Violated,
        Regularity::Unknown => Verdict::Undecided,
    }
}

fn regseq_step(step: Step, v: &RegSeqVerdict) -> Result<Step, PipelineError> {
    let mut s = step
        .out("verdict", text(format!("{:?}", v.verdict)))
        .out("reduced", text(join(&v.reduced)))
        .out("witness", json_text(&v.witness)?);
    if let Some(n) = &v.note {
        s = s.out("note", text(n));
    }
    s.verdict = regularity_verdict(v);
    Ok(s)
}

pub(crate) fn join(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn criterion_outputs(step: Step, results: &[CriterionResult]) -> Result<Step, PipelineError> {
    let mut s = step;
    for r in results {
        s = s.out(&r.name, json_text(r)?);
    }
    s.verdict = exact(results.iter().all(|r| r.holds));
    Ok(s)
}

// the recorded width already reflects the caller's precision policy, so
// replay must not depend on the environment cap
fn segment_roots(n: u32, inputs: &[NamedValue]) -> Result<Vec<SegmentRoot>, PipelineError> {
    Ok(isolate_segment_roots_with(n, &get_rational(inputs, "width")?, u32::MAX)?)
}

/// Run one operation from its recorded inputs.
pub fn run_step(op: &str, inputs: &[NamedValue]) -> Result<Step, PipelineError> {
    let step = Step::new(op, inputs.to_vec());
    match op {
        "build_pq" => {
            let d = build_pq(get_u32(inputs, "n")?)?;
            Ok(step
                .out("p", text(&d.p))
                .out("c", text(&d.c))
                .out("q", text(&d.q))
                .out("q_degree", Value::int(d.q_degree() as u64))
                .out("q_primitive_lc", Value::int(d.q_primitive().lc())))
        }
        "certify_irreducible" => {
            let q = build_pq(get_u32(inputs, "n")?)?.q_primitive();
            let cert = certify_irreducible(&q, DEFAULT_PRIME_BUDGET);
            let mut s = step
                .out("primes", text(join(&cert.primes)))
                .out("patterns", text(format!("{:?}", cert.patterns)))
                .out("surviving_degrees", text(format!("{:?}", cert.surviving_degrees)));
            s.verdict = match cert.verdict {
                IrreducibilityVerdict::Irreducible => Verdict::Satisfied,
                IrreducibilityVerdict::Inconclusive => Verdict::Undecided,
            };
            Ok(s)
        }
        "lc_obstruction" => {
            let lc = build_pq(get_u32(inputs, "n")?)?.q_primitive().lc();
            let blocks = lc != BigInt::from(1) && lc != BigInt::from(2);
            let mut s = step.out("lc", Value::int(lc));
            s.verdict = exact(blocks);
            Ok(s)
        }
        "max_modulus" => {
            let n = get_u32(inputs, "n")?;
            let roots = segment_roots(n, inputs)?;
            let top = roots.last().ok_or_else(|| PipelineError::Invalid(format!("Q_{n} has no segment roots")))?;
            Ok(step
                .out("segment_roots", Value::int(roots.len() as u64))
                .out("t", Value::Interval(top.t.clone()))
                .out("r", Value::Interval(top.modulus())))
        }
        "c_small_threshold" => {
            let rep = c_small_threshold(&get_interval(inputs, "r")?, get_u64(inputs, "b")?);
            let c_lo = rep.input("c_lo").cloned().expect("c_small_threshold records c_lo");
            let mut s = step.out("value", Value::Interval(rep.value.clone())).out("c_lo", c_lo);
            s.verdict = rep.verdict;
            s.reports.push(rep);
            Ok(s)
        }
        "lmn3_c_max" => {
            let rep = lmn3_c_max(get_u64(inputs, "b")?, get_u32(inputs, "prec")?)?;
            let mut s = step;
            if let Some(c) = rep.input("c_max") {
                s = s.out("c_max", c.clone());
            }
            s.verdict = rep.verdict;
            s.reports.push(rep);
            Ok(s)
        }
        "lmn3_inequality" => {
            let rep = lmn3_inequality(get_u64(inputs, "b")?, &get_interval(inputs, "c")?)?;
            let margin = rep.input("margin").cloned().expect("margin recorded");
            let mut s = step.out("value", Value::Interval(rep.value.clone())).out("margin", margin);
            s.verdict = rep.verdict;
            s.reports.push(rep);
            Ok(s)
        }
        "close_window" => {
            let b = get_u64(inputs, "b")?;
            let roots = segment_roots(b as u32, inputs)?;
            let zeta = roots.last().ok_or_else(|| PipelineError::Invalid(format!("Q_{b} has no segment roots")))?;
            let scan =
                close_window(b, zeta, get_u64(inputs, "c_lo")?, get_u64(inputs, "c_hi")?, get_u32(inputs, "prec")?)?;
            let mut s = step
                .out("theta", Value::Interval(scan.theta.clone()))
                .out("pi_over_theta", Value::Interval(scan.period.clone()));
            if let Some((lo, hi)) = scan.m_range {
                s = s.out("m_lo", Value::int(lo)).out("m_hi", Value::int(hi));
            }
            if let Some(m) = scan.unresolved {
                s = s.out("unresolved_m", Value::int(m)).out("near_hit", flag(scan.near_hit));
            }
            s.verdict = scan.report.verdict;
            s.reports.push(scan.report);
            Ok(s)
        }
        "trivial_zeros" => {
            let exps: Vec<u64> =
                ["a", "b", "c"].iter().filter_map(|k| get_opt_u64(inputs, k).transpose()).collect::<Result<_, _>>()?;
            let t = TrivialZeros::of(&exps);
            Ok(step.out("zero_minus_one", flag(t.zero_minus_one)).out("cube_roots", flag(t.cube_roots)))
        }
        "pair_zset" => {
            let z = pair_zset(get_u32(inputs, "b")?, get_u32(inputs, "c")?)?;
            let mut s = step
                .out("defining", text(&z.defining))
                .out("zero_minus_one", flag(z.trivial.zero_minus_one))
                .out("cube_roots", flag(z.trivial.cube_roots));
            s.verdict = exact(z.nontrivial_empty());
            Ok(s)
        }
        "triple_zset" => {
            let r = triple_zset(get_u64(inputs, "a")?, get_u64(inputs, "b")?, get_u64(inputs, "c")?)?;
            Ok(match r {
                TripleZSet::Decided(z) => {
                    let mut s = step
                        .out("defining", text(&z.defining))
                        .out("zero_minus_one", flag(z.trivial.zero_minus_one))
                        .out("cube_roots", flag(z.trivial.cube_roots));
                    s.verdict = exact(z.nontrivial_empty());
                    s
                }
                TripleZSet::Candidate(c) => {
                    let mut s = step.out("residual", text(&c.residual)).out("reason", text(&c.reason));
                    s.verdict = Verdict::Undecided;
                    s
                }
            })
        }
        "regseq3_rational" => {
            let v = regseq3_rational(get_u64(inputs, "a")?, get_u64(inputs, "b")?, get_u64(inputs, "c")?)?;
            regseq_step(step, &v)
        }
        "regseq3_mod_p" => {
            let v = regseq3_mod_p(
                get_u64(inputs, "a")?,
                get_u64(inputs, "b")?,
                get_u64(inputs, "c")?,
                get_u64(inputs, "p")?,
            )?;
            regseq_step(step, &v)
        }
        "regseq2" => {
            let ch = match get_opt_u64(inputs, "p")? {
                Some(p) => Characteristic::Prime(p),
                None => Characteristic::Zero,
            };
            let v = regseq2(get_u64(inputs, "a")?, get_u64(inputs, "b")?, ch)?;
            regseq_step(step, &v)
        }
        "criteria" => {
            let entries: Vec<u64> = get_text(inputs, "set")?
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| PipelineError::Invalid("set must be a comma-separated list of integers".into()))?;
            let set = ExponentSet::new(entries).map_err(|e| PipelineError::Invalid(e.to_string()))?;
            let mut results = vec![factorial_divisibility(&set)];
            if set.len() == 4 {
                results.push(conjecture4_conditions(&set).map_err(|e| PipelineError::Invalid(e.to_string()))?);
            }
            if set.len() == 2 {
                let (a, b) = (set.entries()[0], set.entries()[1]);
                for k in 1..=3 {
                    let case = UnityCase::from_index(k).expect("cases 1..3");
                    results.push(roots_of_unity_case(case, a, b).map_err(|e| PipelineError::Invalid(e.to_string()))?);
                }
            }
            criterion_outputs(step, &results)
        }
        "normal4" => {
            let r = normal4(get_u64(inputs, "a")?, get_u64(inputs, "b")?)
                .map_err(|e| PipelineError::Invalid(e.to_string()))?;
            criterion_outputs(step, &[r])
        }
        "membership" => {
            let nvars = get_u64(inputs, "nvars")? as usize;
            let target =
                parse_poly(get_text(inputs, "target")?, nvars).map_err(|e| PipelineError::Invalid(e.to_string()))?;
            let gens =
                parse_poly_list(get_text(inputs, "gens")?, nvars).map_err(|e| PipelineError::Invalid(e.to_string()))?;
            let ans = graded_membership(&target, &gens).map_err(|e| PipelineError::Invalid(e.to_string()))?;
            let cof: Vec<String> = ans.cofactors.iter().map(|c| format!("({c})")).collect();
            let mut s = step
                .out("member", flag(ans.member))
                .out("degree", Value::int(ans.degree))
                .out("unknowns", Value::int(ans.unknowns as u64))
                .out("equations", Value::int(ans.equations as u64))
                .out("rank", Value::int(ans.rank as u64));
            if ans.member {
                s = s.out("cofactors", text(cof.join(", ")));
            }
            s.verdict = exact(ans.member);
            Ok(s)
        }
        "general_bounds" => {
            let a = get_u64(inputs, "a")?;
            let profile = match get_text(inputs, "profile")? {
                "exactly-one-even" => ParityProfile::ExactlyOneEven,
                "other" => ParityProfile::Other,
                p => return Err(PipelineError::Invalid(format!("unknown parity profile '{p}'"))),
            };
            let g = general_bounds(a, profile, get_opt_u64(inputs, "b")?, get_u32(inputs, "prec")?)?;
            let mut s =
                step.out("b_bound", Value::Integer(g.b_bound.to_string())).out("r_lower", Value::Interval(g.r_lower));
            s.verdict = if g.reports.iter().any(|r| r.verdict == Verdict::Undecided) {
                Verdict::Undecided
            } else {
                Verdict::Satisfied
            };
            s.reports = g.reports;
            Ok(s)
        }
        _ => Err(PipelineError::Invalid(format!("unknown operation '{op}'"))),
    }
}

pub(crate) fn inputs(pairs: Vec<(&str, Value)>) -> Vec<NamedValue> {
    pairs.into_iter().map(|(k, v)| nv(k, v)).collect()
}
