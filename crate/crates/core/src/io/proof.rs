//! Proof text: rendering, parsing, and the prove/verify drivers.
//!
//! ```text
//! YES
//! template: mgwpo-direct
//! scc: off
//! obligation 1: direct (2 rules)
//! parameters:
//!   s_A(x) = x + 1
//!   p_B(x) = max{0, x - 1}
//! obligations:
//!   p(s(x)) -> x : strict [1]
//! ```
//!
//! The parameter and status blocks double as certificate files: `verify`
//! reads them back, recomputes the obligations from the problem and checks
//! every group independently of the search.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::algebra::{Interpretation, SymbolInterp};
use crate::dp::Obligation;
use crate::error::{Error, Result};
use crate::search::{
    find_certificate, verify_certificate, Certificate, Orientation, SearchOutcome, SearchSpace,
    Template, VerifyReport,
};
use crate::term::Symbol;
use crate::triples::Precedence;
use crate::trs::{Signature, Trs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofVerdict {
    Terminating,
    Unknown,
    Timeout,
}

impl ProofVerdict {
    pub fn keyword(self) -> &'static str {
        match self {
            ProofVerdict::Terminating => "YES",
            ProofVerdict::Unknown => "MAYBE",
            ProofVerdict::Timeout => "TIMEOUT",
        }
    }
}

/// One discharged obligation: its certificate and the case chain of every
/// oriented rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofGroup {
    pub title: String,
    pub certificate: Certificate,
    pub orientations: Vec<Orientation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub verdict: ProofVerdict,
    pub template: Template,
    pub scc: bool,
    pub groups: Vec<ProofGroup>,
    pub notes: Vec<String>,
}

/// Settings of a `prove` run.
#[derive(Clone, Debug)]
pub struct ProveOptions {
    pub space: SearchSpace,
    pub scc: bool,
    pub budget: Option<Duration>,
    pub jobs: usize,
}

impl ProveOptions {
    pub fn new(template: Template) -> Self {
        ProveOptions {
            space: SearchSpace::new(template),
            scc: false,
            budget: None,
            jobs: 0,
        }
    }
}

/// The obligations a template must discharge for `trs`.
pub fn obligations(trs: &Trs, template: Template, scc: bool) -> Vec<Obligation> {
    if template.is_direct() {
        vec![Obligation::direct(trs)]
    } else {
        Obligation::dp_obligations(trs, scc)
    }
}

fn display_budget(b: Option<Duration>) -> String {
    match b {
        Some(d) => format!("{}s", d.as_secs_f64()),
        None => "unbounded".to_string(),
    }
}

/// Searches a certificate for every obligation. The time budget is shared
/// by all obligations; the run stops at the first one without a certificate.
pub fn prove(trs: &Trs, opts: &ProveOptions) -> Proof {
    let template = opts.space.template;
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let mut proof = Proof {
        verdict: ProofVerdict::Terminating,
        template,
        scc: opts.scc,
        groups: Vec::new(),
        notes: Vec::new(),
    };
    for (i, ob) in obligations(trs, template, opts.scc).iter().enumerate() {
        let remaining = deadline.map(|d| d.saturating_duration_since(Instant::now()));
        match find_certificate(ob, &opts.space, remaining, opts.jobs) {
            SearchOutcome::Found { certificate, .. } => {
                let report = verify_certificate(ob, &certificate)
                    .expect("search only yields well-formed certificates");
                assert!(report.passed, "search returned a certificate that does not verify");
                proof.groups.push(ProofGroup {
                    title: ob.to_string(),
                    certificate,
                    orientations: report.orientations,
                });
            }
            SearchOutcome::Exhausted { space } => {
                proof.verdict = ProofVerdict::Unknown;
                proof.notes.push(format!(
                    "obligation {}: search space exhausted after {space} candidates",
                    i + 1
                ));
                break;
            }
            SearchOutcome::Timeout { .. } => {
                proof.verdict = ProofVerdict::Timeout;
                proof.notes.push(format!(
                    "obligation {}: time budget of {} exhausted",
                    i + 1,
                    display_budget(opts.budget)
                ));
                break;
            }
        }
    }
    if proof.verdict != ProofVerdict::Terminating {
        proof.groups.clear();
    }
    proof
}

fn write_interp(out: &mut String, interp: &Interpretation, role: &str) {
    for (f, i) in interp.entries() {
        let _ = writeln!(out, "  {} = {}", SymbolInterp::render_head(f, role), i.render());
    }
}

/// Renders the parameter and status blocks of a certificate.
pub fn emit_certificate(cert: &Certificate) -> String {
    let mut out = String::from("parameters:\n");
    if let Some(a) = &cert.a {
        write_interp(&mut out, a, "A");
    }
    if let Some(b) = &cert.b {
        write_interp(&mut out, b, "B");
    }
    if let Some(p) = &cert.precedence {
        for (f, r) in p.entries() {
            let _ = writeln!(out, "  rank({f}) = {r}");
        }
    }
    if !cert.template.is_direct() {
        out.push_str("status:\n");
        for (f, pos) in cert.status.entries() {
            let list: Vec<String> = pos.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "  status({f}) = [{}]", list.join(","));
        }
    }
    out
}

/// Deterministic line-oriented rendering of a proof.
pub fn emit_proof(p: &Proof) -> String {
    let mut out = format!("{}\n", p.verdict.keyword());
    let _ = writeln!(out, "template: {}", p.template);
    let _ = writeln!(out, "scc: {}", if p.scc { "on" } else { "off" });
    for n in &p.notes {
        let _ = writeln!(out, "note: {n}");
    }
    for (i, g) in p.groups.iter().enumerate() {
        let _ = writeln!(out, "obligation {}: {}", i + 1, g.title);
        out.push_str(&emit_certificate(&g.certificate));
        out.push_str("obligations:\n");
        for o in &g.orientations {
            let _ = writeln!(
                out,
                "  {} : {} [{}]",
                o.rule,
                if o.strict_required { "strict" } else { "weak" },
                o.trace.as_deref().unwrap_or("-")
            );
        }
    }
    out
}

/// Certificates read back from a proof or certificate file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedProof {
    pub verdict: Option<ProofVerdict>,
    pub template: Template,
    pub scc: bool,
    pub certificates: Vec<Certificate>,
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Certificate(format!("line {line}: {msg}"))
}

/// Splits `f#_A(x1,x2)` into the symbol text and the role letter.
fn split_head(head: &str) -> Option<(&str, &str)> {
    let head = match head.find('(') {
        Some(i) if head.ends_with(')') => &head[..i],
        Some(_) => return None,
        None => head,
    };
    head.rsplit_once('_')
}

fn resolve(sig: &Signature, text: &str, line: usize) -> Result<Symbol> {
    sig.resolve(text)
        .ok_or_else(|| bad(line, format!("unknown symbol {text}")))
}

/// Parses the certificate groups of a proof. A file holding only a
/// parameter block (with `template:` line) is a single-group certificate.
pub fn parse_proof(text: &str, sig: &Signature) -> Result<ParsedProof> {
    #[derive(PartialEq)]
    enum Block {
        None,
        Parameters,
        Status,
        Obligations,
    }
    let mut verdict = None;
    let mut template = None;
    let mut scc = false;
    let mut certs: Vec<Certificate> = Vec::new();
    let mut block = Block::None;
    let mut in_group = false;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with("note:") {
            continue;
        }
        if let Some(v) = [ProofVerdict::Terminating, ProofVerdict::Unknown, ProofVerdict::Timeout]
            .into_iter()
            .find(|v| v.keyword() == l)
        {
            verdict = Some(v);
            continue;
        }
        if let Some(t) = l.strip_prefix("template:") {
            template = Some(t.trim().parse::<Template>().map_err(|e| bad(line, e))?);
            continue;
        }
        if let Some(s) = l.strip_prefix("scc:") {
            scc = match s.trim() {
                "on" => true,
                "off" => false,
                other => return Err(bad(line, format!("scc must be on or off, got {other}"))),
            };
            continue;
        }
        let t = template.ok_or_else(|| bad(line, "template line must come first"))?;
        if l.starts_with("obligation ") {
            certs.push(Certificate::new(t));
            in_group = true;
            block = Block::None;
            continue;
        }
        match l {
            "parameters:" => {
                if !in_group {
                    certs.push(Certificate::new(t));
                    in_group = true;
                }
                block = Block::Parameters;
                continue;
            }
            "status:" => {
                block = Block::Status;
                continue;
            }
            "obligations:" => {
                block = Block::Obligations;
                continue;
            }
            _ => {}
        }
        let cert = certs.last_mut().ok_or_else(|| bad(line, "entry outside a group"))?;
        match block {
            Block::Obligations => {}
            Block::None => return Err(bad(line, format!("unexpected line `{l}`"))),
            Block::Status => {
                let inner = l
                    .strip_prefix("status(")
                    .and_then(|r| r.split_once(") = "))
                    .ok_or_else(|| bad(line, "expected status(f) = [..]"))?;
                let f = resolve(sig, inner.0, line)?;
                let list = inner
                    .1
                    .trim()
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| bad(line, "expected a bracketed list"))?;
                let positions = list
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| bad(line, "bad position")))
                    .collect::<Result<Vec<_>>>()?;
                cert.status.set(f, positions).map_err(|e| bad(line, e))?;
            }
            Block::Parameters => {
                let (head, rhs) = l
                    .split_once(" = ")
                    .ok_or_else(|| bad(line, "expected `<head> = <value>`"))?;
                if let Some(name) = head.strip_prefix("rank(").and_then(|r| r.strip_suffix(')')) {
                    let f = resolve(sig, name, line)?;
                    let r: u32 = rhs.trim().parse().map_err(|_| bad(line, "bad rank"))?;
                    cert.precedence.get_or_insert_with(Precedence::new).set(f, r);
                    continue;
                }
                let (name, role) = split_head(head).ok_or_else(|| bad(line, "bad head"))?;
                let f = resolve(sig, name, line)?;
                let i = SymbolInterp::parse(rhs, f.arity()).map_err(|e| bad(line, e))?;
                let slot = match role {
                    "A" => &mut cert.a,
                    "B" => &mut cert.b,
                    other => return Err(bad(line, format!("unknown role {other}"))),
                };
                slot.get_or_insert_with(Interpretation::new)
                    .insert(f, i)
                    .map_err(|e| bad(line, e))?;
            }
        }
    }
    let template = template.ok_or_else(|| Error::Certificate("missing template line".into()))?;
    Ok(ParsedProof {
        verdict,
        template,
        scc,
        certificates: certs,
    })
}

/// Checks the certificates of a parsed proof against the obligations
/// recomputed from `trs`. Group counts must match.
pub fn verify_proof(trs: &Trs, parsed: &ParsedProof) -> Result<Vec<VerifyReport>> {
    let obs = obligations(trs, parsed.template, parsed.scc);
    if obs.len() != parsed.certificates.len() {
        return Err(Error::Certificate(format!(
            "{} obligations but {} certificates",
            obs.len(),
            parsed.certificates.len()
        )));
    }
    obs.iter()
        .zip(&parsed.certificates)
        .map(|(ob, c)| verify_certificate(ob, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pred_proof() -> (Trs, String) {
        let trs = fixtures::pred_trs();
        let mut cert = Certificate::new(Template::MgwpoDirect);
        cert.a = Some(fixtures::pred_weights());
        cert.b = Some(fixtures::pred_measure());
        let ob = Obligation::direct(&trs);
        let report = verify_certificate(&ob, &cert).unwrap();
        let proof = Proof {
            verdict: ProofVerdict::Terminating,
            template: Template::MgwpoDirect,
            scc: false,
            groups: vec![ProofGroup {
                title: ob.to_string(),
                certificate: cert,
                orientations: report.orientations,
            }],
            notes: vec![],
        };
        (trs, emit_proof(&proof))
    }

    #[test]
    fn renders_weight_line() {
        let (_, text) = pred_proof();
        assert!(text.starts_with("YES\n"));
        assert!(text.lines().any(|l| l.trim() == "s_A(x) = x + 1"), "{text}");
        assert!(text.lines().any(|l| l.trim() == "p_B(x) = max{0, x - 1}"), "{text}");
    }

    #[test]
    fn proof_round_trips_through_verify() {
        let (trs, text) = pred_proof();
        let parsed = parse_proof(&text, &trs.signature).unwrap();
        assert_eq!(parsed.certificates.len(), 1);
        let reports = verify_proof(&trs, &parsed).unwrap();
        assert!(reports[0].passed);
    }

    #[test]
    fn z08_certificate_round_trips() {
        let trs = fixtures::z08_trs();
        let mut cert = Certificate::new(Template::Spo);
        cert.a = Some(fixtures::z08_marked_weights());
        cert.status = fixtures::z08_status();
        let text = format!("template: spo\nscc: off\n{}", emit_certificate(&cert));
        assert!(text.contains("status(f#) = [2]"), "{text}");
        let parsed = parse_proof(&text, &trs.signature).unwrap();
        assert_eq!(parsed.certificates, vec![cert]);
        assert!(verify_proof(&trs, &parsed).unwrap()[0].passed);
    }

    #[test]
    fn unknown_and_timeout_render_notes() {
        let trs = fixtures::z08_trs();
        let mut opts = ProveOptions::new(Template::Wpo);
        opts.space.max_const = 0;
        opts.space.coeffs = vec![1];
        let text = emit_proof(&prove(&trs, &opts));
        assert!(text.starts_with("MAYBE\n"), "{text}");
        assert!(text.contains("search space exhausted"));
        opts.budget = Some(Duration::ZERO);
        let text = emit_proof(&prove(&trs, &opts));
        assert!(text.starts_with("TIMEOUT\n"), "{text}");
    }

    #[test]
    fn malformed_files_are_rejected() {
        let sig = fixtures::pred_signature();
        assert!(parse_proof("YES\nparameters:\n", &sig).is_err());
        assert!(parse_proof("template: wpo\nparameters:\n  q_A(x) = x\n", &sig).is_err());
        assert!(parse_proof("template: nope\n", &sig).is_err());
    }
}
