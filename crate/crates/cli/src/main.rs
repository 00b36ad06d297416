use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use pscert_core::analytic::{isolate_segment_roots_with, NamedValue, Value, Verdict};
use pscert_core::exactnum::interval::format_decimal;
use pscert_core::exactnum::PrecisionPolicy;
use pscert_core::pipeline::{
    certify_a1_with, certify_criteria, certify_general_bounds, certify_membership, certify_mod_p, certify_pair,
    certify_triple, run_sweep, Certificate, Step, SweepSpec, SCHEMA_VERSION,
};

const EXIT_CONCLUSIVE: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "pscert", version, about = "Certified checks for common zeros of power-sum polynomials")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Starting working precision in bits
    #[arg(long, global = true, value_name = "BITS")]
    precision: Option<u32>,
    /// Precision cap in bits (overrides PSCERT_MAX_PRECISION)
    #[arg(long, global = true, value_name = "BITS")]
    max_precision: Option<u32>,
    /// Worker threads for parallel steps
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print P_n, C_n and Q_n = P_n / C_n
    Pq {
        #[arg(long)]
        n: u32,
    },
    /// Nontrivial common zeros of P_b and P_c
    Pair {
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Nontrivial common zeros of 1 + x^e + y^e for e in {a, b, c}
    Triple {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Regular-sequence test for two or three power sums
    Regseq {
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        /// Field characteristic (0 or a prime)
        #[arg(long = "char", value_name = "P", default_value_t = 0)]
        characteristic: u64,
    },
    /// Regular-sequence test for three power sums over F_p
    Modp {
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        #[arg(long)]
        p: u64,
    },
    /// Necessary conditions for an exponent set
    Criteria {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u64>,
    },
    /// Normality of the four-variable quotient
    Normal4 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Homogeneous ideal membership over Q
    Member {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        nvars: usize,
    },
    /// Certified enclosures of the zeros of Q_n on the segment Re z = -1/2
    Roots {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 20)]
        digits: u32,
    },
    /// Emptiness certificate for Z(b, c), all c > b
    Certify {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
    /// Bounds for the general case a >= 2
    Bounds {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: Option<u64>,
    },
    /// Run a parameter sweep described by a JSON file
    Sweep {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Report {
    text: String,
    json: serde_json::Value,
    conclusive: bool,
}

impl Report {
    fn certificate(cert: &Certificate) -> Result<Self, Failure> {
        Ok(Report { text: cert.render_text(), json: serde_json::to_value(cert)?, conclusive: cert.is_conclusive() })
    }

    fn step(step: &Step) -> Result<Self, Failure> {
        let json = with_schema(serde_json::to_value(step)?);
        let mut text = format!("{} [{}]\n", step.op, step.verdict);
        for o in &step.outputs {
            text.push_str(&format!("  {} = {}\n", o.name, show(&o.value)));
        }
        for r in &step.reports {
            text.push_str(&format!("  {}: {} [{}]\n", r.name, r.value, r.verdict));
        }
        Ok(Report { text, json, conclusive: step.verdict != Verdict::Undecided })
    }
}

fn with_schema(v: serde_json::Value) -> serde_json::Value {
    match v {
        serde_json::Value::Object(mut m) => {
            m.insert("schema".into(), json!(SCHEMA_VERSION));
            serde_json::Value::Object(m)
        }
        other => other,
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::Integer(s) | Value::Rational(s) | Value::Text(s) => s.clone(),
        Value::Interval(i) => format!("{} (width {:e})", format_decimal(i, 20), i.width_f64()),
    }
}

fn int(name: &str, v: u64) -> NamedValue {
    NamedValue { name: name.into(), value: Value::Integer(v.to_string()) }
}

fn step(op: &str, inputs: Vec<NamedValue>) -> Result<Report, Failure> {
    Report::step(&pscert_core::pipeline::run_step(op, &inputs)?)
}

fn policy(g: &Global) -> PrecisionPolicy {
    let mut p = PrecisionPolicy::from_env();
    if let Some(cap) = g.max_precision {
        p = p.with_cap(cap);
    }
    if let Some(start) = g.precision {
        p = p.with_start(start);
    }
    p
}

fn three(exps: &[u64], what: &str) -> Result<(u64, u64, u64), Failure> {
    match exps {
        [a, b, c] => Ok((*a, *b, *c)),
        _ => Err(Failure(format!("{what} expects exactly three exponents, got {}", exps.len()))),
    }
}

fn pq(n: u32) -> Result<Report, Failure> {
    let s = pscert_core::pipeline::run_step("build_pq", &[int("n", n as u64)])?;
    let get = |k: &str| s.output(k).map(show).unwrap_or_default();
    let text = format!("P = {}\nC = {}\nQ = {}\ndeg Q = {}\n", get("p"), get("c"), get("q"), get("q_degree"));
    Ok(Report { text, json: with_schema(serde_json::to_value(&s)?), conclusive: true })
}

fn regseq(exps: &[u64], ch: u64) -> Result<Report, Failure> {
    let mut ins = Vec::new();
    let op = match exps {
        [a, b] => {
            ins.extend([int("a", *a), int("b", *b)]);
            "regseq2"
        }
        [a, b, c] => {
            ins.extend([int("a", *a), int("b", *b), int("c", *c)]);
            if ch == 0 {
                "regseq3_rational"
            } else {
                "regseq3_mod_p"
            }
        }
        _ => return Err(Failure(format!("regseq expects two or three exponents, got {}", exps.len()))),
    };
    if ch != 0 {
        ins.push(int("p", ch));
    }
    step(op, ins)
}

fn roots(n: u32, digits: u32, policy: PrecisionPolicy) -> Result<Report, Failure> {
    let width = BigRational::new(BigInt::from(1), BigInt::from(10).pow(digits));
    let roots = isolate_segment_roots_with(n, &width, policy.cap)?;
    let d = digits as usize;
    let mut text = format!("Q_{n}: {} zero(s) on Re z = -1/2 with Im z > 0, width < 1e-{digits}\n", roots.len());
    let mut list = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        let a = r.alpha();
        let modulus = r.modulus();
        text.push_str(&format!(
            "  [{i}] z = -1/2 + {}i  |z| = {}\n",
            format_decimal(&a.im, d),
            format_decimal(&modulus, d)
        ));
        list.push(json!({
            "t": r.t,
            "u": r.u,
            "alpha": { "re": a.re, "im": a.im },
            "modulus": modulus,
            "orbit": r.orbit.iter().map(|z| json!({ "re": z.re, "im": z.im })).collect::<Vec<_>>(),
        }));
    }
    let json = json!({ "schema": SCHEMA_VERSION, "n": n, "digits": digits, "roots": list });
    Ok(Report { text, json, conclusive: true })
}

fn certify(a: u64, b: u64, emit: Option<&PathBuf>, policy: PrecisionPolicy) -> Result<Report, Failure> {
    if a != 1 {
        return Err(Failure(format!("certify supports a = 1 only (got a = {a}); use `bounds` for a >= 2")));
    }
    let cert = certify_a1_with(b, policy)?;
    if let Some(path) = emit {
        std::fs::write(path, cert.to_json()?)?;
    }
    Report::certificate(&cert)
}

fn sweep(path: &PathBuf, threads: Option<usize>) -> Result<Report, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let spec: SweepSpec = serde_json::from_str(&raw).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let summary = run_sweep(&spec, threads)?;
    let mut text = format!("{} instance(s)\n", summary.instances);
    for (k, v) in &summary.counts {
        text.push_str(&format!("  {k}: {v}\n"));
    }
    for r in summary.results.iter().filter(|r| r.error.is_some()) {
        text.push_str(&format!("  error in {}: {}\n", r.id, r.error.as_deref().unwrap_or("")));
    }
    Ok(Report { text, json: with_schema(serde_json::to_value(&summary)?), conclusive: summary.all_conclusive() })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let g = &cli.global;
    if let Some(n) = g.threads {
        if n == 0 {
            return Err(Failure("--threads must be positive".into()));
        }
        pscert_core::par::set_global_threads(n);
    }
    match &cli.cmd {
        Command::Pq { n } => pq(*n),
        Command::Pair { b, c } => Report::certificate(&certify_pair(*b, *c)?),
        Command::Triple { a, b, c } => Report::certificate(&certify_triple(*a, *b, *c)?),
        Command::Regseq { exps, characteristic } => regseq(exps, *characteristic),
        Command::Modp { exps, p } => {
            let (a, b, c) = three(exps, "modp")?;
            Report::certificate(&certify_mod_p(a, b, c, *p)?)
        }
        Command::Criteria { set } => Report::certificate(&certify_criteria(set)?),
        Command::Normal4 { a, b } => step("normal4", vec![int("a", *a), int("b", *b)]),
        Command::Member { target, gens, nvars } => Report::certificate(&certify_membership(target, gens, *nvars)?),
        Command::Roots { n, digits } => roots(*n, *digits, policy(g)),
        Command::Certify { a, b, emit } => certify(*a, *b, emit.as_ref(), policy(g)),
        Command::Bounds { a, b } => Report::certificate(&certify_general_bounds(*a, *b, policy(g))?),
        Command::Sweep { spec } => sweep(spec, g.threads),
    }
}

// A closed pipe (`pscert ... | head`) is not worth a panic.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn fail(json: bool, kind: &str, message: &str) -> ExitCode {
    if json {
        emit(&format!(
            "{}\n",
            json!({ "schema": SCHEMA_VERSION, "error": { "kind": kind, "message": message.trim_end() } })
        ));
    } else {
        eprintln!("{}", message.trim_end());
    }
    ExitCode::from(EXIT_ERROR)
}

fn main() -> ExitCode {
    let json_requested = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                emit(&e.to_string());
                return ExitCode::from(EXIT_CONCLUSIVE);
            }
            // clap exits with 2 on usage errors; 2 is reserved for undecided
            return fail(json_requested, "usage", &e.render().to_string());
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.global.json {
                match serde_json::to_string_pretty(&report.json) {
                    Ok(s) => emit(&format!("{s}\n")),
                    Err(e) => return fail(true, "internal", &e.to_string()),
                }
            } else {
                emit(&report.text);
            }
            ExitCode::from(if report.conclusive { EXIT_CONCLUSIVE } else { EXIT_UNDECIDED })
        }
        Err(Failure(msg)) => fail(cli.global.json, "error", &msg),
    }
}
