//! `gwpo`: termination proofs with weighted and semantic path orders.
//!
//! Exit status: 0 terminating / check passed, 1 unknown or failed,
//! 2 timeout, 3 usage or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use gwpo_core::checks::{run_check, Check};
use gwpo_core::io::{self, Config, ProofVerdict};
use gwpo_core::search::{Instance, StatusSpace, Template};
use gwpo_core::Trs;

const EXIT_OK: u8 = 0;
const EXIT_UNKNOWN: u8 = 1;
const EXIT_TIMEOUT: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "gwpo", version, about = "Termination prover based on generalized weighted path orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statuses {
    Total,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Search a termination proof for an ARI problem.
    Prove {
        file: PathBuf,
        /// wpo, gwpo, spo, mgwpo-direct or kbo-like (default spo).
        #[arg(long, value_parser = parse_template)]
        template: Option<Template>,
        /// Time budget in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Largest constant and base in interpretations.
        #[arg(long)]
        max_const: Option<u64>,
        /// Statuses considered by reduction-pair templates.
        #[arg(long, value_enum)]
        statuses: Option<Statuses>,
        /// Split dependency pairs into cyclic components.
        #[arg(long, value_enum)]
        scc: Option<OnOff>,
        /// Also write the proof to this file.
        #[arg(long)]
        proof: Option<PathBuf>,
        /// TOML file with search settings; flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Worker threads (0: all cores, 1: sequential).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare two terms under the order of a certificate.
    Compare {
        file: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        params: PathBuf,
        /// Certificate group to use, counting from 1.
        #[arg(long, default_value_t = 1)]
        group: usize,
    },
    /// Run a brute-force oracle check and print a JSON report.
    Oracle {
        /// mgwpo-equals-mspo (thm2.5), pair-inclusion (thm3.6),
        /// fast-gwpo (prop2.6), laws or totality.
        check: String,
        /// Largest term size of the universe.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Re-check a proof or certificate file against a problem.
    Verify {
        file: PathBuf,
        #[arg(long)]
        params: PathBuf,
    },
}

fn parse_template(s: &str) -> Result<Template, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Template::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// A failure with its exit status.
struct Failure(u8, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<Trs, Failure> {
    io::parse_ari(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Prove {
            file,
            template,
            timeout,
            max_const,
            statuses,
            scc,
            proof,
            config,
            jobs,
        } => {
            let trs = load_problem(&file)?;
            let cfg = match &config {
                Some(p) => Config::parse(&read(p)?).map_err(usage)?,
                None => Config::default(),
            };
            let mut opts = cfg.options(template).map_err(usage)?;
            if let Some(t) = timeout {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(usage(format!("invalid timeout {t}")));
                }
                opts.budget = Some(Duration::from_secs_f64(t));
            }
            if let Some(m) = max_const {
                opts.space.max_const = m;
            }
            if let Some(s) = statuses {
                opts.space.statuses = match s {
                    Statuses::Total => StatusSpace::Total,
                    Statuses::All => StatusSpace::All,
                };
            }
            if let Some(s) = scc {
                opts.scc = matches!(s, OnOff::On);
            }
            if let Some(j) = jobs {
                opts.jobs = j;
            }
            let p = io::prove(&trs, &opts);
            let text = io::emit_proof(&p);
            print!("{text}");
            if let Some(path) = proof {
                std::fs::write(&path, &text)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            Ok(match p.verdict {
                ProofVerdict::Terminating => EXIT_OK,
                ProofVerdict::Unknown => EXIT_UNKNOWN,
                ProofVerdict::Timeout => EXIT_TIMEOUT,
            })
        }
        Command::Compare {
            file,
            lhs,
            rhs,
            params,
            group,
        } => {
            let trs = load_problem(&file)?;
            let parsed = io::parse_proof(&read(&params)?, &trs.signature).map_err(usage)?;
            let cert = group
                .checked_sub(1)
                .and_then(|g| parsed.certificates.get(g))
                .ok_or_else(|| usage(format!("no certificate group {group}")))?;
            let inst = Instance::new(cert).map_err(usage)?;
            let s = trs.signature.parse_term(&lhs).map_err(usage)?;
            let t = trs.signature.parse_term(&rhs).map_err(usage)?;
            let (c, stats) = inst.compare(&s, &t);
            println!("template: {}", cert.template);
            println!("weak: {}", c.weak);
            println!("strict: {}", c.strict);
            println!("comparisons: {stats}");
            Ok(EXIT_OK)
        }
        Command::Oracle { check, size, jobs } => {
            let check: Check = check.parse().map_err(usage)?;
            let out = match run_check(check, size, jobs) {
                Ok(out) => out,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_UNKNOWN);
                }
            };
            let json = serde_json::to_string_pretty(&out).expect("reports serialize");
            println!("{json}");
            Ok(if out.passed { EXIT_OK } else { EXIT_UNKNOWN })
        }
        Command::Verify { file, params } => {
            let trs = load_problem(&file)?;
            let parsed = io::parse_proof(&read(&params)?, &trs.signature).map_err(usage)?;
            if let Some(v) = parsed.verdict.filter(|&v| v != ProofVerdict::Terminating) {
                println!("proof has verdict {}; there is no certificate to check", v.keyword());
                println!("REJECTED");
                return Ok(EXIT_UNKNOWN);
            }
            let reports = io::verify_proof(&trs, &parsed).map_err(usage)?;
            let mut ok = true;
            for (i, r) in reports.iter().enumerate() {
                match &r.failure {
                    None => println!("obligation {}: verified", i + 1),
                    Some(f) => {
                        ok = false;
                        println!("obligation {}: rejected: {f}", i + 1);
                    }
                }
            }
            println!("{}", if ok { "VERIFIED" } else { "REJECTED" });
            Ok(if ok { EXIT_OK } else { EXIT_UNKNOWN })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
