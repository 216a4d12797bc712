//! Exit-status contract and output of the `gwpo` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

fn gwpo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwpo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gwpo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn z08_spo_terminates_and_wpo_is_unknown() {
    let yes = gwpo(&["prove", &corpus("z08.ari"), "--template", "spo"]);
    assert_eq!(code(&yes), 0, "{}", stdout(&yes));
    assert!(stdout(&yes).starts_with("YES\n"));
    let maybe = gwpo(&["prove", &corpus("z08.ari"), "--template", "wpo"]);
    assert_eq!(code(&maybe), 1);
    assert!(stdout(&maybe).starts_with("MAYBE\n"));
    assert!(stdout(&maybe).contains("search space exhausted"));
}

#[test]
fn predecessor_proof_round_trips_through_verify_and_compare() {
    let proof = std::env::temp_dir().join(format!("gwpo-pred-{}.proof", std::process::id()));
    let p = proof.to_string_lossy().into_owned();
    let out = gwpo(&["prove", &corpus("predecessor.ari"), "--template", "mgwpo-direct", "--proof", &p]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&proof).unwrap(), stdout(&out));

    let v = gwpo(&["verify", &corpus("predecessor.ari"), "--params", &p]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert!(stdout(&v).ends_with("VERIFIED\n"));

    let c = gwpo(&[
        "compare",
        &corpus("predecessor.ari"),
        "--lhs",
        "p(s(x))",
        "--rhs",
        "x",
        "--params",
        &p,
    ]);
    assert_eq!(code(&c), 0);
    let text = stdout(&c);
    assert!(text.contains("strict: true"), "{text}");
    assert!(text.contains("comparisons: A="), "{text}");
}

#[test]
fn given_parameters_verify() {
    let cert = temp(
        "pred.cert",
        "template: mgwpo-direct\nparameters:\n  p_A(x) = x\n  s_A(x) = x + 1\n  f_A(x) = x\n  \
         p_B(x) = max{0, x - 1}\n  s_B(x) = x + 1\n  f_B(x) = x + 1\n",
    );
    let v = gwpo(&["verify", &corpus("predecessor.ari"), "--params", &cert.to_string_lossy()]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));

    let bad = temp(
        "pred-bad.cert",
        "template: mgwpo-direct\nparameters:\n  p_A(x) = x\n  s_A(x) = x\n  f_A(x) = x\n  \
         p_B(x) = x\n  s_B(x) = x\n  f_B(x) = x\n",
    );
    let v = gwpo(&["verify", &corpus("predecessor.ari"), "--params", &bad.to_string_lossy()]);
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).contains("REJECTED"));
}

#[test]
fn proofs_are_deterministic() {
    let args = ["prove", &corpus("minus-quot.ari"), "--template", "gwpo", "--scc", "on"];
    let a = gwpo(&args);
    let b = gwpo(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let seq = gwpo(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.stdout, seq.stdout);
}

#[test]
fn timeout_exit_status() {
    let out = gwpo(&["prove", &corpus("z08.ari"), "--template", "gwpo", "--timeout", "0.2"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).starts_with("TIMEOUT\n"));
}

#[test]
fn oracle_accepts_descriptive_names_and_aliases() {
    let out = gwpo(&["oracle", "thm2.5", "--size", "5"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["check"], "mgwpo-equals-mspo");
    assert_eq!(json["passed"], true);
    let out = gwpo(&["oracle", "totality", "--size", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&gwpo(&["oracle", "no-such-check"])), 3);
}

#[test]
fn usage_and_parse_errors_exit_3() {
    assert_eq!(code(&gwpo(&["prove", &corpus("z08.ari"), "--bogus"])), 3);
    assert_eq!(code(&gwpo(&["prove", &corpus("z08.ari"), "--template", "lpo"])), 3);
    assert_eq!(code(&gwpo(&[])), 3);
    assert_eq!(code(&gwpo(&["prove", "/nonexistent.ari"])), 3);
    let bad = temp("bad.ari", "(format TRS)\n(fun f 2)\n(rule (f x) x)\n");
    let out = gwpo(&["prove", &bad.to_string_lossy()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("E-ARITY: 3:8"));
    assert_eq!(code(&gwpo(&["--help"])), 0);
}

#[test]
fn config_file_sets_the_search() {
    let cfg = temp("search.toml", "template = \"wpo\"\nscc = true\n");
    let out = gwpo(&["prove", &corpus("successor.ari"), "--config", &cfg.to_string_lossy()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("template: wpo\nscc: on\n"), "{text}");
    let bad = temp("bad.toml", "colour = 1\n");
    assert_eq!(code(&gwpo(&["prove", &corpus("successor.ari"), "--config", &bad.to_string_lossy()])), 3);
}
