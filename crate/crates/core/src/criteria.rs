//! Arithmetic predicates on exponent sets: valuations, divisibility
//! conditions, normality of two power sums in four variables, and the
//! roots-of-unity existence criteria with explicit witnesses.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CriteriaError;
use crate::exactnum::unity::{sum_is_zero, UnityRoot};

/// Sorted, distinct, positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentSet(Vec<u64>);

impl ExponentSet {
    pub fn new(mut entries: Vec<u64>) -> Result<Self, CriteriaError> {
        if entries.is_empty() {
            return Err(CriteriaError::InvalidSet("empty set".into()));
        }
        if entries.contains(&0) {
            return Err(CriteriaError::InvalidSet("exponents must be positive".into()));
        }
        entries.sort_unstable();
        let n = entries.len();
        entries.dedup();
        if entries.len() != n {
            return Err(CriteriaError::InvalidSet("exponents must be distinct".into()));
        }
        Ok(ExponentSet(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |g, &a| g.gcd(&a))
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriterionWitness {
    Unity(Vec<UnityRoot>),
    /// A subset `{d, 2d, 5d}` of the exponent set.
    Subset(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub name: String,
    pub holds: bool,
    pub details: Vec<Condition>,
    pub witness: Option<CriterionWitness>,
    pub note: Option<String>,
}

impl CriterionResult {
    fn from_conditions(name: &str, details: Vec<Condition>) -> Self {
        CriterionResult {
            name: name.into(),
            holds: details.iter().all(|c| c.holds),
            details,
            witness: None,
            note: None,
        }
    }
}

fn cond(label: &str, holds: bool, detail: String) -> Condition {
    Condition { label: label.into(), holds, detail }
}

/// `p`-adic valuation of `n >= 1`.
pub fn nu(p: u64, n: u64) -> u32 {
    assert!(p >= 2 && n >= 1, "nu needs p >= 2 and n >= 1");
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Whether `n!` divides `a_1 a_2 ... a_n`.
pub fn factorial_divisibility(set: &ExponentSet) -> CriterionResult {
    let n = set.len() as u64;
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    let prod: BigUint = set.entries().iter().map(|&a| BigUint::from(a)).product();
    let holds = (&prod % &fact).is_zero();
    CriterionResult::from_conditions(
        "factorial divisibility",
        vec![cond("n! | product", holds, format!("{n}! = {fact}, product = {prod}"))],
    )
}

/// Find `{d, 2d, 5d}` inside the set.
fn d_2d_5d(set: &ExponentSet) -> Option<Vec<u64>> {
    let s: BTreeSet<u64> = set.entries().iter().copied().collect();
    set.entries().iter().find(|&&d| s.contains(&(2 * d)) && s.contains(&(5 * d))).map(|&d| vec![d, 2 * d, 5 * d])
}

/// The three arithmetic conditions proposed for four power sums to form a
/// regular sequence. Only the conditions are evaluated; the regularity
/// statement itself is conjectural.
pub fn conjecture4_conditions(set: &ExponentSet) -> Result<CriterionResult, CriteriaError> {
    if set.len() != 4 {
        return Err(CriteriaError::InvalidSet(format!("need four exponents, got {}", set.len())));
    }
    let g = set.gcd();
    if g != 1 {
        return Err(CriteriaError::GcdNotOne(g));
    }
    let prod: BigUint = set.entries().iter().map(|&a| BigUint::from(a)).product();
    let c1 = (&prod % BigUint::from(24u32)).is_zero();
    let vals: Vec<u32> = set.entries().iter().map(|&a| nu(2, a)).collect();
    let positive: BTreeSet<u32> = vals.iter().copied().filter(|&v| v > 0).collect();
    let c2 = positive.len() >= 2;
    let sub = d_2d_5d(set);
    let mut r = CriterionResult::from_conditions(
        "four power sums",
        vec![
            cond("24 | product", c1, format!("product = {prod}")),
            cond("two distinct positive 2-adic valuations", c2, format!("valuations = {vals:?}")),
            cond(
                "no subset {d,2d,5d}",
                sub.is_none(),
                sub.as_ref().map_or_else(|| "none found".into(), |s| format!("subset {s:?}")),
            ),
        ],
    );
    r.witness = sub.map(CriterionWitness::Subset);
    r.note = Some("conjectural criterion: conditions only, regularity is not claimed".into());
    Ok(r)
}

/// Normality of `C[x_1..x_4]/(p_a, p_b)`.
pub fn normal4(a: u64, b: u64) -> Result<CriterionResult, CriteriaError> {
    if a == 0 || a >= b {
        return Err(CriteriaError::InvalidSet(format!("need 0 < a < b, got ({a},{b})")));
    }
    let details = if a == 1 {
        vec![cond("b even", b.is_multiple_of(2), format!("b = {b}"))]
    } else {
        let (v2a, v2b) = (nu(2, a), nu(2, b));
        let (v3a, v3b, v3d) = (nu(3, a), nu(3, b), nu(3, b - a));
        vec![
            cond("nu_2(a) != nu_2(b)", v2a != v2b, format!("nu_2 = ({v2a},{v2b})")),
            cond(
                "nu_3(a) != nu_3(b) or nu_3(a) = nu_3(b) = nu_3(a-b)",
                v3a != v3b || (v3a == v3b && v3b == v3d),
                format!("nu_3 = ({v3a},{v3b}), nu_3(a-b) = {v3d}"),
            ),
        ]
    };
    Ok(CriterionResult::from_conditions("normal domain in four variables", details))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnityCase {
    /// `alpha^{b-a} = 1`, `alpha^a + 1 = 0`.
    One,
    /// `alpha^{b-a} = beta^{b-a} = 1`, `alpha^a + beta^a + 1 = 0`.
    Two,
    /// `alpha^{b-a} = beta^{b-a} = gamma^{b-a} = 1`, `alpha^a + beta^a + gamma^a + 1 = 0`.
    Three,
}

impl UnityCase {
    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(UnityCase::One),
            2 => Some(UnityCase::Two),
            3 => Some(UnityCase::Three),
            _ => None,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            UnityCase::One => 1,
            UnityCase::Two => 2,
            UnityCase::Three => 3,
        }
    }
}

/// Check the defining equations of `case` for a tuple exactly.
pub fn unity_equations_hold(case: UnityCase, a: u64, b: u64, roots: &[UnityRoot]) -> bool {
    if roots.len() != case.arity() {
        return false;
    }
    let d = a.abs_diff(b);
    if !roots.iter().all(|r| r.pow(d).is_one()) {
        return false;
    }
    let mut terms: Vec<UnityRoot> = roots.iter().map(|r| r.pow(a)).collect();
    terms.push(UnityRoot::one());
    sum_is_zero(&terms)
}

/// Existence of roots of unity satisfying `case`, with a witness built from
/// a root of minimal order when it holds.
pub fn roots_of_unity_case(case: UnityCase, a: u64, b: u64) -> Result<CriterionResult, CriteriaError> {
    if a == 0 || b == 0 || a == b {
        return Err(CriteriaError::InvalidSet(format!("need distinct positive a, b, got ({a},{b})")));
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let d = hi - lo;
    let (holds, detail, witness) = match case {
        UnityCase::One | UnityCase::Three => {
            let (ea, eb) = (nu(2, a), nu(2, b));
            let alpha = UnityRoot::new(2u64.pow(ea + 1), 1);
            let w = if case == UnityCase::One { vec![alpha] } else { vec![alpha, alpha.pow(2), alpha] };
            (ea == eb, format!("nu_2 = ({ea},{eb})"), w)
        }
        UnityCase::Two => {
            let (ea, eb, ed) = (nu(3, a), nu(3, b), nu(3, d));
            let alpha = UnityRoot::new(3u64.pow(ea + 1), 1);
            (ea == eb && eb < ed, format!("nu_3 = ({ea},{eb}), nu_3(b-a) = {ed}"), vec![alpha, alpha.pow(2)])
        }
    };
    let name = format!("roots of unity case {}", case.arity());
    let mut r = CriterionResult::from_conditions(&name, vec![cond("valuation condition", holds, detail)]);
    if holds {
        debug_assert!(unity_equations_hold(case, a, b, &witness));
        let verified = unity_equations_hold(case, a, b, &witness);
        r.details.push(cond("witness verified", verified, format!("{witness:?}")));
        r.holds = verified;
        r.witness = Some(CriterionWitness::Unity(witness));
    }
    Ok(r)
}
