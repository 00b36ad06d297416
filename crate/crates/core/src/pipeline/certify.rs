//! Certificate builders and the rule table that turns step verdicts into a
//! conclusion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::steps::{inputs, run_step};
use super::{Certificate, CertificateKind, Conclusion, Outcome, Step, SCHEMA_VERSION, TOOL_VERSION};
use crate::analytic::{NamedValue, ParityProfile, Value, Verdict};
use crate::error::PipelineError;
use crate::exactnum::{PrecisionPolicy, RealInterval};

const BOTH_ODD: &str = "both exponents odd: only {0, -1} is computed here; the absence of nontrivial zeros is cited to Beukers (external), not computed";
const LMN_AXIOM: &str = "the lower bound for |alpha^k - 1| from linear forms in logarithms is assumed, not proved here";

fn certificate(kind: CertificateKind, inputs: Vec<NamedValue>, steps: Vec<Step>, trace: Vec<u32>) -> Certificate {
    let (conclusion, caveats) = conclude(kind, &inputs, &steps);
    Certificate {
        schema: SCHEMA_VERSION,
        kind,
        tool_version: TOOL_VERSION.into(),
        inputs,
        steps,
        caveats,
        conclusion,
        precision_trace: trace,
        comment: None,
    }
}

fn int_input(inputs: &[NamedValue], name: &str) -> Option<u64> {
    inputs.iter().find(|v| v.name == name).and_then(|v| match &v.value {
        Value::Integer(s) => s.parse().ok(),
        _ => None,
    })
}

fn flag_out(step: &Step, name: &str) -> bool {
    matches!(step.output(name), Some(Value::Text(s)) if s == "true")
}

fn int_out(step: &Step, name: &str) -> Option<BigInt> {
    match step.output(name) {
        Some(Value::Integer(s)) => s.parse().ok(),
        _ => None,
    }
}

fn verdict_of(steps: &[Step], op: &str) -> Option<Verdict> {
    steps.iter().find(|s| s.op == op).map(|s| s.verdict)
}

fn conclusion(outcome: Outcome, statement: impl Into<String>) -> Conclusion {
    Conclusion { outcome, statement: statement.into() }
}

fn trivial_outcome(step: &Step) -> Outcome {
    if flag_out(step, "zero_minus_one") || flag_out(step, "cube_roots") {
        Outcome::NonemptyTrivial
    } else {
        Outcome::Empty
    }
}

/// Derive the conclusion and caveats from the step verdicts. Any step that
/// a conclusion depends on being Undecided makes the conclusion Undecided.
pub fn conclude(kind: CertificateKind, inputs: &[NamedValue], steps: &[Step]) -> (Conclusion, Vec<String>) {
    let mut caveats = Vec::new();
    let undecided = |why: &str| conclusion(Outcome::Undecided, why.to_string());
    let c = match kind {
        CertificateKind::A1Pipeline => {
            let b = int_input(inputs, "b").unwrap_or(0);
            let Some(pq) = steps.iter().find(|s| s.op == "build_pq") else {
                return (undecided("missing build_pq step"), caveats);
            };
            if int_out(pq, "q_degree") == Some(BigInt::from(0)) {
                return (
                    conclusion(Outcome::Vacuous, format!("Q_{b} is constant, so Z({b}, c) is empty for every c")),
                    caveats,
                );
            }
            let irreducible = verdict_of(steps, "certify_irreducible") == Some(Verdict::Satisfied);
            let even_closed = irreducible && verdict_of(steps, "lc_obstruction") == Some(Verdict::Satisfied);
            let window_needed = match (
                steps.iter().find(|s| s.op == "c_small_threshold").and_then(|s| int_out(s, "c_lo")),
                steps.iter().find(|s| s.op == "lmn3_c_max").and_then(|s| int_out(s, "c_max")),
            ) {
                (Some(lo), Some(hi)) => Some(lo < hi),
                _ => None,
            };
            // the max-modulus value and the window scan are only valid for irreducible Q_b
            let modulus_ok = match verdict_of(steps, "max_modulus") {
                Some(v) => irreducible && v == Verdict::Satisfied,
                None => true,
            };
            let analytic_closed = modulus_ok
                && verdict_of(steps, "c_small_threshold") == Some(Verdict::Satisfied)
                && verdict_of(steps, "lmn3_c_max") == Some(Verdict::Satisfied)
                && match window_needed {
                    Some(false) => true,
                    Some(true) => irreducible && verdict_of(steps, "close_window") == Some(Verdict::Satisfied),
                    None => false,
                };
            if steps.iter().any(|s| s.op == "c_small_threshold") {
                caveats.push(LMN_AXIOM.to_string());
            }
            if !irreducible {
                caveats.push(format!(
                    "Q_{b} not certified irreducible: 14/9 used as the modulus bound and the window scan is unavailable"
                ));
            }
            if b % 2 == 1 {
                caveats.push("odd b: the computed claim covers even c; for odd c both exponents are odd, a case cited to Beukers (external), not computed".to_string());
                if even_closed || analytic_closed {
                    let how = if even_closed { "leading-coefficient obstruction" } else { "analytic bounds" };
                    conclusion(Outcome::Empty, format!("Z({b}, c) is empty for every even c > {b} ({how})"))
                } else {
                    undecided("some analytic step could not be certified at the precision cap")
                }
            } else if analytic_closed {
                conclusion(Outcome::Empty, format!("Z({b}, c) is empty for every c > {b}"))
            } else {
                undecided("some analytic step could not be certified at the precision cap")
            }
        }
        CertificateKind::Pair => {
            let (b, c) = (int_input(inputs, "b").unwrap_or(0), int_input(inputs, "c").unwrap_or(0));
            if let Some(s) = steps.iter().find(|s| s.op == "pair_zset") {
                match s.verdict {
                    Verdict::Violated => conclusion(Outcome::Nonempty, format!("Z({b}, {c}) has nontrivial points")),
                    Verdict::Satisfied => match trivial_outcome(s) {
                        Outcome::Empty => conclusion(Outcome::Empty, format!("(1, {b}, {c}) has no common zero")),
                        _ => conclusion(
                            Outcome::NonemptyTrivial,
                            format!("Z({b}, {c}) is empty; only trivial zeros remain"),
                        ),
                    },
                    Verdict::Undecided => undecided("gcd step undecided"),
                }
            } else if let Some(s) = steps.iter().find(|s| s.op == "trivial_zeros") {
                caveats.push(BOTH_ODD.to_string());
                let _ = s;
                conclusion(
                    Outcome::NonemptyTrivial,
                    format!("trivial zeros {{0, -1}}; nontrivial part of Z({b}, {c}): external: Beukers"),
                )
            } else {
                undecided("no steps")
            }
        }
        CertificateKind::Triple => match steps.iter().find(|s| s.op == "triple_zset") {
            Some(s) => match s.verdict {
                Verdict::Violated => conclusion(Outcome::Nonempty, "nontrivial common zeros exist"),
                Verdict::Satisfied => match trivial_outcome(s) {
                    Outcome::Empty => conclusion(Outcome::Empty, "no common zero besides the origin"),
                    _ => conclusion(Outcome::NonemptyTrivial, "only trivial common zeros"),
                },
                Verdict::Undecided => undecided("candidate: residual beyond the degree budget"),
            },
            None => undecided("no steps"),
        },
        CertificateKind::ModP => match steps.iter().find(|s| s.op == "regseq3_mod_p" || s.op == "regseq3_rational") {
            Some(s) => match s.verdict {
                Verdict::Satisfied => {
                    conclusion(Outcome::Empty, "regular sequence: the origin is the only common zero")
                }
                Verdict::Violated => {
                    let trivial = matches!(s.output("witness"), Some(Value::Text(w)) if w.contains("ZeroMinusOne") || w.contains("CubeRoots"));
                    if trivial {
                        conclusion(Outcome::NonemptyTrivial, "not regular: trivial common zeros")
                    } else {
                        conclusion(Outcome::Nonempty, "not regular: nontrivial common zeros")
                    }
                }
                Verdict::Undecided => undecided("regularity not decided"),
            },
            None => undecided("no steps"),
        },
        CertificateKind::Criteria | CertificateKind::Membership => match steps.first() {
            Some(s) => match s.verdict {
                Verdict::Satisfied => conclusion(Outcome::Holds, format!("{} holds", s.op)),
                Verdict::Violated => conclusion(Outcome::Fails, format!("{} fails", s.op)),
                Verdict::Undecided => undecided("undecided"),
            },
            None => undecided("no steps"),
        },
        CertificateKind::GeneralBounds => {
            if steps.is_empty() || steps.iter().any(|s| s.verdict == Verdict::Undecided) {
                undecided("some bound could not be separated from its threshold")
            } else {
                conclusion(Outcome::Holds, "all bounds evaluated")
            }
        }
    };
    (c, caveats)
}

pub fn certify_a1(b: u64) -> Result<Certificate, PipelineError> {
    certify_a1_with(b, PrecisionPolicy::from_env())
}

fn width_for(prec: u32) -> Value {
    Value::rational(&BigRational::new(BigInt::one(), BigInt::one() << prec as usize))
}

/// The `a = 1` pipeline for one `b`: exact steps once, analytic steps at
/// increasing precision until conclusive or the cap is reached.
pub fn certify_a1_with(b: u64, policy: PrecisionPolicy) -> Result<Certificate, PipelineError> {
    if b < 2 || b > u32::MAX as u64 {
        return Err(PipelineError::Invalid(format!("need b >= 2, got {b}")));
    }
    let cert_inputs = inputs(vec![("a", Value::int(1u64)), ("b", Value::int(b))]);
    let n = || ("n", Value::int(b));
    let mut steps = vec![run_step("build_pq", &inputs(vec![n()]))?];
    if steps[0].output("q_degree") == Some(&Value::int(0u64)) {
        return Ok(certificate(CertificateKind::A1Pipeline, cert_inputs, steps, Vec::new()));
    }
    let irr = run_step("certify_irreducible", &inputs(vec![n()]))?;
    let irreducible = irr.verdict == Verdict::Satisfied;
    steps.push(irr);
    if irreducible {
        let lc = run_step("lc_obstruction", &inputs(vec![n()]))?;
        let even_closed = lc.verdict == Verdict::Satisfied;
        steps.push(lc);
        if even_closed && b % 2 == 1 {
            return Ok(certificate(CertificateKind::A1Pipeline, cert_inputs, steps, Vec::new()));
        }
    }
    let mut trace = Vec::new();
    let mut analytic = Vec::new();
    for prec in policy.ladder() {
        trace.push(prec);
        analytic = analytic_steps(b, prec, irreducible)?;
        // a near hit in the window is not a precision problem
        let stuck = analytic.iter().any(|s| flag_out(s, "near_hit"));
        if stuck || analytic.iter().all(|s| s.verdict != Verdict::Undecided) {
            break;
        }
    }
    steps.extend(analytic);
    let mut cert = certificate(CertificateKind::A1Pipeline, cert_inputs, steps, trace);
    if b == 8 {
        cert.comment = Some("c_max is the tool's certified bracket; the commonly quoted rounded figure is 5e6".into());
    }
    Ok(cert)
}

fn analytic_steps(b: u64, prec: u32, irreducible: bool) -> Result<Vec<Step>, PipelineError> {
    let mut out = Vec::new();
    let r = if irreducible {
        let s = run_step("max_modulus", &inputs(vec![("n", Value::int(b)), ("width", width_for(prec))]))?;
        let r = match s.output("r") {
            Some(Value::Interval(r)) => r.clone(),
            _ => return Err(PipelineError::Invalid("max_modulus produced no r".into())),
        };
        out.push(s);
        r
    } else {
        RealInterval::from_rational(&BigRational::new(14.into(), 9.into()), prec)
    };
    let small = run_step("c_small_threshold", &inputs(vec![("r", Value::Interval(r)), ("b", Value::int(b))]))?;
    let c_value = small.output("value").cloned();
    let c_lo = int_out(&small, "c_lo");
    out.push(small);
    let lmn = run_step("lmn3_c_max", &inputs(vec![("b", Value::int(b)), ("prec", Value::int(prec))]))?;
    let c_hi = int_out(&lmn, "c_max");
    out.push(lmn);
    if let (Some(lo), Some(hi), Some(cv)) = (c_lo, c_hi, c_value) {
        if lo >= hi {
            out.push(run_step("lmn3_inequality", &inputs(vec![("b", Value::int(b)), ("c", cv)]))?);
        } else if irreducible {
            out.push(run_step(
                "close_window",
                &inputs(vec![
                    ("b", Value::int(b)),
                    ("width", width_for(prec)),
                    ("c_lo", Value::Integer(lo.to_string())),
                    ("c_hi", Value::Integer(hi.to_string())),
                    ("prec", Value::int(prec)),
                ]),
            )?);
        }
    }
    Ok(out)
}

pub fn certify_pair(b: u64, c: u64) -> Result<Certificate, PipelineError> {
    if !(2 <= b && b < c) || c > u32::MAX as u64 {
        return Err(PipelineError::Invalid(format!("need 2 <= b < c, got ({b}, {c})")));
    }
    let ins = inputs(vec![("b", Value::int(b)), ("c", Value::int(c))]);
    let op = if b % 2 == 1 && c % 2 == 1 { "trivial_zeros" } else { "pair_zset" };
    let steps = vec![run_step(op, &ins)?];
    Ok(certificate(CertificateKind::Pair, ins, steps, Vec::new()))
}

pub fn certify_triple(a: u64, b: u64, c: u64) -> Result<Certificate, PipelineError> {
    let ins = inputs(vec![("a", Value::int(a)), ("b", Value::int(b)), ("c", Value::int(c))]);
    let steps = vec![run_step("triple_zset", &ins)?];
    Ok(certificate(CertificateKind::Triple, ins, steps, Vec::new()))
}

pub fn certify_mod_p(a: u64, b: u64, c: u64, p: u64) -> Result<Certificate, PipelineError> {
    let ins = inputs(vec![("a", Value::int(a)), ("b", Value::int(b)), ("c", Value::int(c)), ("p", Value::int(p))]);
    let steps = vec![run_step("regseq3_mod_p", &ins)?];
    Ok(certificate(CertificateKind::ModP, ins, steps, Vec::new()))
}

pub fn certify_criteria(set: &[u64]) -> Result<Certificate, PipelineError> {
    let ins = inputs(vec![("set", Value::Text(super::steps::join(set)))]);
    let steps = vec![run_step("criteria", &ins)?];
    Ok(certificate(CertificateKind::Criteria, ins, steps, Vec::new()))
}

pub fn certify_membership(target: &str, gens: &str, nvars: usize) -> Result<Certificate, PipelineError> {
    let ins = inputs(vec![
        ("target", Value::Text(target.into())),
        ("gens", Value::Text(gens.into())),
        ("nvars", Value::int(nvars as u64)),
    ]);
    let steps = vec![run_step("membership", &ins)?];
    Ok(certificate(CertificateKind::Membership, ins, steps, Vec::new()))
}

/// General-case bounds for `a >= 2`; both parity profiles unless `b` fixes one.
pub fn certify_general_bounds(a: u64, b: Option<u64>, policy: PrecisionPolicy) -> Result<Certificate, PipelineError> {
    let profiles = match b {
        Some(b) => vec![ParityProfile::of(a, b)],
        None => vec![ParityProfile::ExactlyOneEven, ParityProfile::Other],
    };
    let mut cert_inputs = vec![("a", Value::int(a))];
    if let Some(b) = b {
        cert_inputs.push(("b", Value::int(b)));
    }
    let mut trace = Vec::new();
    let mut steps = Vec::new();
    for prec in policy.ladder() {
        trace.push(prec);
        steps.clear();
        for p in &profiles {
            let name = match p {
                ParityProfile::ExactlyOneEven => "exactly-one-even",
                ParityProfile::Other => "other",
            };
            let mut ins = vec![("a", Value::int(a)), ("profile", Value::Text(name.into())), ("prec", Value::int(prec))];
            if let Some(b) = b {
                ins.push(("b", Value::int(b)));
            }
            steps.push(run_step("general_bounds", &inputs(ins))?);
        }
        if steps.iter().all(|s| s.verdict != Verdict::Undecided) {
            break;
        }
    }
    Ok(certificate(CertificateKind::GeneralBounds, inputs(cert_inputs), steps, trace))
}
