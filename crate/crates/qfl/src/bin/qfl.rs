//! Command-line front end: generate coefficient tables, run verification
//! suites, evaluate family members and check single Fourier cases.
//!
//! Exit codes: 0 all checks pass, 1 identity/theorem failure, 2 usage or
//! configuration error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qfl::families::{self, FamilyKind};
use qfl::fourier::{self, FourierCase, QuadratureRule};
use qfl::rational::{self, parse_rational, Rational};
use qfl::suites::{self, SuiteOptions};
use qfl::{Error, MPoly};

#[derive(Parser)]
#[command(name = "qfl", version, about = "q-Fibonacci/Lucas polynomial toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Write the coefficient table for family members 0..n
    Gen {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Base for the fixed-q families, as an exact rational "p/q"
        #[arg(long, value_parser = parse_rational)]
        q: Option<Rational>,
        /// Little q-Jacobi parameters
        #[arg(long, value_parser = parse_rational)]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        b: Option<Rational>,
    },
    /// Run a verification suite and report per-identity results
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 96)]
        nodes: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the merged JSON report here instead of stdout
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        /// Test hook: perturb one Fibonacci-side coefficient
        #[arg(long, hide = true)]
        mutate_fib_coeff: bool,
    },
    /// Evaluate one family member at an exact rational point
    Eval {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational, default_value = "0")]
        x: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "0")]
        s: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        q: Rational,
        #[arg(long, value_parser = parse_rational)]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        b: Option<Rational>,
    },
    /// Check a single Fourier transform case
    Fourier {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[arg(long, default_value_t = 0.0)]
        y: f64,
        #[arg(long, default_value_t = 96)]
        nodes: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Gen {
            family,
            n,
            format,
            q,
            a,
            b,
        } => cmd_gen(family, n, format, q, a, b),
        Command::Verify {
            suite,
            n_max,
            nodes,
            tol,
            seed,
            report,
            mutate_fib_coeff,
        } => cmd_verify(suite, n_max, nodes, tol, seed, report, mutate_fib_coeff),
        Command::Eval {
            family,
            n,
            x,
            s,
            q,
            a,
            b,
        } => cmd_eval(family, n, &x, &s, &q, a, b),
        Command::Fourier {
            family,
            n,
            a,
            s,
            q,
            y,
            nodes,
            tol,
        } => cmd_fourier(family, n, a, s, q, y, nodes, tol),
    }
}

/// Build member `n` of any family, routing the fixed-base kinds through
/// their rational parameters.
fn member(
    kind: FamilyKind,
    n: u32,
    q: &Rational,
    a: Option<&Rational>,
    b: Option<&Rational>,
) -> Result<MPoly, Error> {
    use FamilyKind::*;
    match kind {
        Fib | Lucas | MonicFib | MonicLucas | ChebU | ChebT => {
            Ok(families::classical_explicit(kind, n))
        }
        QFib | QLucas => Ok(families::q_family_explicit(kind, n)),
        QFibInv | QLucasInv => Ok(families::q_family_inverted(kind, n)),
        RFib | RLucas | SU | ST => families::r_s_family(kind, n, q),
        LittleQJacobi => {
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::Domain(
                        "little-q-jacobi requires --a and --b".into(),
                    ))
                }
            };
            families::little_q_jacobi(n, a, b, q)
        }
    }
}

#[derive(Serialize)]
struct GenEntry {
    n: u32,
    terms: Vec<qfl::mpoly::TermRecord>,
}

fn cmd_gen(
    family: FamilyKind,
    n: u32,
    format: Format,
    q: Option<Rational>,
    a: Option<Rational>,
    b: Option<Rational>,
) -> Result<ExitCode, Error> {
    let q = q.unwrap_or_else(|| rational::rat(1, 2));
    let members: Vec<MPoly> = (0..=n)
        .map(|i| member(family, i, &q, a.as_ref(), b.as_ref()))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            let entries: Vec<GenEntry> = members
                .iter()
                .enumerate()
                .map(|(i, p)| GenEntry {
                    n: i as u32,
                    terms: p.to_records(),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).unwrap());
        }
        Format::Csv => {
            println!("n,ex,es,eq,num,den");
            for (i, p) in members.iter().enumerate() {
                for t in p.to_records() {
                    println!("{i},{},{},{},{},{}", t.ex, t.es, t.eq, t.num, t.den);
                }
            }
        }
        Format::Latex => {
            for (i, p) in members.iter().enumerate() {
                println!("P_{{{i}}} = {}", p.to_latex());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ConfigEcho {
    suite: String,
    n_max: u32,
    nodes: usize,
    tol: f64,
    seed: u64,
}

#[derive(Serialize)]
struct FullReport {
    suite: String,
    identities: Vec<qfl::report::IdentityReport>,
    fourier: Vec<fourier::FourierResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence_probe: Option<families::RecurrenceReport>,
    config_echo: ConfigEcho,
}

fn cmd_verify(
    suite: String,
    n_max: u32,
    nodes: usize,
    tol: f64,
    seed: u64,
    report_path: Option<std::path::PathBuf>,
    mutate_fib_coeff: bool,
) -> Result<ExitCode, Error> {
    let seed = match std::env::var("QFL_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Domain(format!("QFL_SEED is not an integer: {v:?}")))?,
        Err(_) => seed,
    };
    let opts = SuiteOptions {
        n_max,
        nodes,
        tol,
        seed,
        mutate_fib_coeff,
    };
    let out = suites::run_suite(&suite, &opts)?;
    for r in &out.identities {
        println!("{}", r.line());
    }
    let passed = out.all_passed();
    println!(
        "{}: {}/{} identities passed",
        suite,
        out.identities.iter().filter(|r| r.passed()).count(),
        out.identities.len()
    );
    let full = FullReport {
        suite: suite.clone(),
        identities: out.identities,
        fourier: out.fourier,
        recurrence_probe: out.recurrence_probe,
        config_echo: ConfigEcho {
            suite,
            n_max,
            nodes,
            tol,
            seed,
        },
    };
    let json = serde_json::to_string_pretty(&full).unwrap();
    match report_path {
        Some(path) => std::fs::write(&path, json + "\n")
            .map_err(|e| Error::Domain(format!("cannot write report: {e}")))?,
        None => println!("{json}"),
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_eval(
    family: FamilyKind,
    n: u32,
    x: &Rational,
    s: &Rational,
    q: &Rational,
    a: Option<Rational>,
    b: Option<Rational>,
) -> Result<ExitCode, Error> {
    let p = member(family, n, q, a.as_ref(), b.as_ref())?;
    let v = p.eval(x, s, q)?;
    println!("{}", rational::display(&v));
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_fourier(
    family: FamilyKind,
    n: u32,
    a: f64,
    s: f64,
    q: f64,
    y: f64,
    nodes: usize,
    tol: f64,
) -> Result<ExitCode, Error> {
    let case = FourierCase::new(family, n, a, s, q, y)?;
    let rule = QuadratureRule::gauss_hermite(nodes);
    match fourier::verify_fourier_theorem(&case, &rule, tol) {
        Ok(result) => {
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::TheoremViolation(result)) => {
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e),
    }
}
