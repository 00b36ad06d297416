//! Parameter sweeps: one certificate per instance, computed in parallel,
//! collected in a fixed order so output does not depend on thread count.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{certify_mod_p, certify_pair, certify_triple, Certificate, CertificateKind, Outcome};
use crate::error::PipelineError;
use crate::par::par_map;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    /// `Z(b, c)` for `min <= b < c <= max`.
    PairA1,
    /// `Z(a, b, c)` for `max(min, 2) <= a < b < c <= max` with `gcd = 1`.
    Triple,
    /// Each listed triple (or the range, with `a >= 1`) against each prime.
    ModP,
}

/// Conditions on the product of the exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFilter {
    #[serde(default)]
    pub product_divisible_by: Option<u64>,
    #[serde(default)]
    pub product_coprime_to: Option<u64>,
}

impl SweepFilter {
    fn accepts(&self, exps: &[u64]) -> bool {
        let prod: u128 = exps.iter().map(|&e| e as u128).product();
        self.product_divisible_by.is_none_or(|d| prod.is_multiple_of(d as u128))
            && self.product_coprime_to.is_none_or(|d| exps.iter().all(|e| e.gcd(&d) == 1))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub mode: SweepMode,
    #[serde(default = "default_min")]
    pub min: u64,
    #[serde(default)]
    pub max: u64,
    #[serde(default)]
    pub filter: SweepFilter,
    #[serde(default)]
    pub triples: Vec<[u64; 3]>,
    #[serde(default)]
    pub primes: Vec<u64>,
    #[serde(default)]
    pub threads: Option<usize>,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
}

fn default_min() -> u64 {
    2
}

/// Ranges beyond this are rejected as not desk-scale.
pub const SWEEP_MAX_EXPONENT: u64 = 2000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub id: String,
    pub outcome: Option<Outcome>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub mode: SweepMode,
    pub instances: usize,
    /// Keys: empty, nonempty-trivial, nonempty, candidate, undecided, error.
    pub counts: BTreeMap<String, usize>,
    pub results: Vec<InstanceResult>,
}

impl SweepSummary {
    pub fn count(&self, key: &str) -> usize {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn all_conclusive(&self) -> bool {
        self.count("candidate") + self.count("undecided") + self.count("error") == 0
    }
}

#[derive(Clone, Copy, Debug)]
enum Instance {
    Pair(u64, u64),
    Triple(u64, u64, u64),
    ModP(u64, u64, u64, u64),
}

impl Instance {
    fn id(&self) -> String {
        match self {
            Instance::Pair(b, c) => format!("pair-{b}-{c}"),
            Instance::Triple(a, b, c) => format!("triple-{a}-{b}-{c}"),
            Instance::ModP(a, b, c, p) => format!("modp-{a}-{b}-{c}-{p}"),
        }
    }

    fn run(&self) -> Result<Certificate, PipelineError> {
        match *self {
            Instance::Pair(b, c) => certify_pair(b, c),
            Instance::Triple(a, b, c) => certify_triple(a, b, c),
            Instance::ModP(a, b, c, p) => certify_mod_p(a, b, c, p),
        }
    }
}

fn validate(spec: &SweepSpec) -> Result<(), PipelineError> {
    let ranged = !(spec.mode == SweepMode::ModP && !spec.triples.is_empty());
    if ranged && (spec.max == 0 || spec.max > SWEEP_MAX_EXPONENT || spec.min > spec.max) {
        return Err(PipelineError::Invalid(format!(
            "range [{}, {}] must be nonempty and at most {SWEEP_MAX_EXPONENT}",
            spec.min, spec.max
        )));
    }
    if spec.filter.product_divisible_by == Some(0) || spec.filter.product_coprime_to == Some(0) {
        return Err(PipelineError::Invalid("filter moduli must be positive".into()));
    }
    if spec.mode == SweepMode::ModP && spec.primes.is_empty() {
        return Err(PipelineError::Invalid("mod-p sweep needs at least one prime".into()));
    }
    if spec.threads == Some(0) {
        return Err(PipelineError::Invalid("threads must be positive".into()));
    }
    Ok(())
}

fn instances(spec: &SweepSpec) -> Vec<Instance> {
    let f = &spec.filter;
    let mut out = Vec::new();
    let triples_in = |lo: u64| {
        let mut v = Vec::new();
        for a in lo.max(spec.min)..=spec.max {
            for b in a + 1..=spec.max {
                for c in b + 1..=spec.max {
                    if a.gcd(&b).gcd(&c) == 1 && f.accepts(&[a, b, c]) {
                        v.push([a, b, c]);
                    }
                }
            }
        }
        v
    };
    match spec.mode {
        SweepMode::PairA1 => {
            for b in spec.min.max(2)..=spec.max {
                for c in b + 1..=spec.max {
                    if f.accepts(&[b, c]) {
                        out.push(Instance::Pair(b, c));
                    }
                }
            }
        }
        SweepMode::Triple => out.extend(triples_in(2).into_iter().map(|[a, b, c]| Instance::Triple(a, b, c))),
        SweepMode::ModP => {
            let ts = if spec.triples.is_empty() { triples_in(1) } else { spec.triples.clone() };
            for [a, b, c] in ts {
                for &p in &spec.primes {
                    out.push(Instance::ModP(a, b, c, p));
                }
            }
        }
    }
    out
}

fn bucket(kind: CertificateKind, o: Outcome) -> &'static str {
    match o {
        Outcome::Empty | Outcome::Vacuous | Outcome::Holds => "empty",
        Outcome::NonemptyTrivial => "nonempty-trivial",
        Outcome::Nonempty | Outcome::Fails => "nonempty",
        Outcome::Undecided if kind == CertificateKind::Triple => "candidate",
        Outcome::Undecided => "undecided",
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), PipelineError> {
    std::fs::write(dir.join(name), contents)?;
    Ok(())
}

/// Run every instance; per-instance errors are recorded, not propagated.
/// `threads` overrides the spec's parallelism degree.
pub fn run_sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<SweepSummary, PipelineError> {
    validate(spec)?;
    let list = instances(spec);
    let certs = par_map(&list, threads.or(spec.threads), |inst| inst.run());
    if let Some(dir) = &spec.output_dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut counts: BTreeMap<String, usize> =
        ["empty", "nonempty-trivial", "nonempty", "candidate", "undecided", "error"]
            .iter()
            .map(|k| (k.to_string(), 0))
            .collect();
    let mut results = Vec::with_capacity(list.len());
    for (inst, cert) in list.iter().zip(certs) {
        let id = inst.id();
        match cert {
            Ok(cert) => {
                *counts.entry(bucket(cert.kind, cert.conclusion.outcome).into()).or_default() += 1;
                if let Some(dir) = &spec.output_dir {
                    write_file(dir, &format!("{id}.json"), &cert.to_json()?)?;
                }
                results.push(InstanceResult { id, outcome: Some(cert.conclusion.outcome), error: None });
            }
            Err(e) => {
                *counts.entry("error".into()).or_default() += 1;
                results.push(InstanceResult { id, outcome: None, error: Some(e.to_string()) });
            }
        }
    }
    let summary = SweepSummary { mode: spec.mode, instances: list.len(), counts, results };
    if let Some(dir) = &spec.output_dir {
        write_file(dir, "summary.json", &serde_json::to_string_pretty(&summary)?)?;
    }
    Ok(summary)
}
