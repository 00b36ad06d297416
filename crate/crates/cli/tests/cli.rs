use std::process::{Command, Output};

use pscert_core::pipeline::{replay, Certificate, Outcome};

fn pscert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pscert")).args(args).env_remove("PSCERT_MAX_PRECISION").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn pq_prints_the_decomposition() {
    let o = pscert(&["pq", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("P = 2x^2 + 2x + 2"), "{s}");
    assert!(s.contains("C = x^2 + x + 1"), "{s}");
    assert!(s.contains("deg Q = 0"), "{s}");
}

#[test]
fn json_output_carries_the_schema() {
    for args in [
        &["--json", "pq", "--n", "7"][..],
        &["--json", "pair", "--b", "6", "--c", "10"],
        &["--json", "normal4", "--a", "1", "--b", "4"],
        &["--json", "criteria", "--set", "1,2,5,8"],
    ] {
        let o = pscert(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&o)["schema"], 1, "{args:?}");
    }
}

#[test]
fn interval_endpoints_are_hex() {
    let o = pscert(&["--json", "roots", "--n", "8", "--digits", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let roots = v["roots"].as_array().unwrap();
    assert!(!roots.is_empty());
    let lo = roots[0]["modulus"]["lo"].as_str().unwrap();
    assert!(lo.starts_with("0x") || lo.starts_with("-0x") || lo == "0", "{lo}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(pscert(&["pair", "--b", "2"]).status.code(), Some(1));
    assert_eq!(pscert(&["nosuch"]).status.code(), Some(1));
    assert_eq!(pscert(&["--threads", "0", "pq", "--n", "3"]).status.code(), Some(1));
    assert_eq!(pscert(&["certify", "--a", "2", "--b", "5"]).status.code(), Some(1));
    let o = pscert(&["--json", "modp", "--exps", "1,2", "--p", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert!(v["error"]["message"].as_str().unwrap().contains("three"));
}

#[test]
fn precision_cap_from_environment_leaves_certify_undecided() {
    let base = || {
        let mut c = Command::new(env!("CARGO_BIN_EXE_pscert"));
        c.args(["certify", "--a", "1", "--b", "8"]);
        c
    };
    let o = base().env("PSCERT_MAX_PRECISION", "16").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    // the flag wins over the environment
    let o = base().env("PSCERT_MAX_PRECISION", "16").arg("--max-precision").arg("4096").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn emitted_certificate_replays() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b8.json");
    let o = pscert(&["certify", "--a", "1", "--b", "8", "--emit", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let cert = Certificate::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert.conclusion.outcome, Outcome::Empty);
    assert!(replay(&cert).unwrap().ok());
}

#[test]
fn algebraic_subcommands() {
    let o = pscert(&["regseq", "--exps", "1,3,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NotRegular"));

    let o = pscert(&["--json", "modp", "--exps", "1,6,100", "--p", "4594399"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["conclusion"]["outcome"], "nonempty");

    let o = pscert(&["member", "--target", "p5", "--gens", "p1,p2", "--nvars", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("membership holds"));

    let o = pscert(&["triple", "--a", "2", "--b", "3", "--c", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_reads_a_json_description() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    std::fs::write(
        &path,
        r#"{"mode":"pair-a1","min":2,"max":12,"filter":{"product_divisible_by":6,"product_coprime_to":null}}"#,
    )
    .unwrap();
    let o = pscert(&["--json", "sweep", "--spec", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["counts"]["empty"], v["instances"]);
}
