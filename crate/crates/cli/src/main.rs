use std::io::{self, Write};
use std::process::ExitCode;

use chromsym::gfun::{self, PermStats};
use chromsym::hessenberg::enumerate_hess;
use chromsym::modlaw;
use chromsym::verify::{self, Suite, SuiteReport};
use chromsym::{hikita, oracle, ptab, qalg, Basis, HessFn, SymFun, Syt};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "chromsym", version, about = "Exact chromatic quasisymmetric functions of unit interval orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of one symmetric function attached to m.
    Compute(ComputeArgs),
    /// Run a verification suite over every Hessenberg function up to size n.
    Verify(VerifyArgs),
    /// Reduce m to a combination of disjoint paths through the modular law.
    Reduce(ReduceArgs),
    /// Print the transition tree of a probabilistic model.
    Trace(TraceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    #[value(name = "X")]
    X,
    #[value(name = "E")]
    E,
    #[value(name = "Ek")]
    Ek,
    #[value(name = "G")]
    G,
    #[value(name = "Gk")]
    Gk,
    #[value(name = "S")]
    S,
    #[value(name = "g")]
    SmallG,
    #[value(name = "rho")]
    Rho,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    E,
    S,
    M,
    H,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::E => Basis::E,
            BasisArg::S => Basis::S,
            BasisArg::M => Basis::M,
            BasisArg::H => Basis::H,
        }
    }
}

/// How `X` is computed.
#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Colorings,
    Hikita,
    An,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    what: What,
    /// Hessenberg function as comma-separated values, e.g. 2,3,5,5,5.
    #[arg(long)]
    m: Option<HessFn>,
    #[arg(long, value_enum, default_value = "e")]
    basis: BasisArg,
    /// Index for Ek, Gk, g and rho.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "colorings")]
    method: Method,
    /// Specialize q to this rational after computing, e.g. 1 or -1/2.
    #[arg(long, allow_hyphen_values = true)]
    at_q: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of egs, x-all, modlaw, sink, appendix, paths.
    #[arg(long)]
    suite: Suite,
    /// Largest size to check; at most 8, or CHROMSYM_NMAX when that is lower.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    m: HessFn,
    #[arg(long, value_enum, default_value = "text")]
    emit: Emit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Hikita,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(value_enum)]
    model: Model,
    #[arg(long)]
    m: HessFn,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => run_verify(a),
        Command::Reduce(a) => reduce(a),
        Command::Trace(a) => trace(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type Outcome = Result<bool, Box<dyn std::error::Error>>;

fn compute(a: ComputeArgs) -> Outcome {
    let need_k = || a.k.unwrap_or_else(|| usage_error("--k is required for Ek, Gk, g and rho"));
    let need_m = || a.m.clone().unwrap_or_else(|| usage_error("--m is required"));
    let f: SymFun = match a.what {
        What::Rho => gfun::rho(need_k()),
        What::X => {
            let m = need_m();
            match a.method {
                Method::Colorings => oracle::x_colorings(&m)?,
                Method::Hikita => hikita::x_hikita(&m)?,
                Method::An => gfun::x_an(&m),
                Method::Schur => ptab::x_schur(&m)?,
            }
        }
        What::E => hikita::e_total(&need_m())?,
        What::Ek => {
            let (m, k) = (need_m(), need_k());
            check_range(k, 1, m.n())?;
            hikita::e_part(&m, k)?
        }
        What::G => PermStats::new(&need_m()).g_total(),
        What::Gk => {
            let (m, k) = (need_m(), need_k());
            check_range(k, 1, m.n())?;
            PermStats::new(&m).g_cap(k)
        }
        What::SmallG => {
            let (m, k) = (need_m(), need_k());
            check_range(k, 0, m.n() - 1)?;
            PermStats::new(&m).g(k)
        }
        What::S => ptab::s_fun(&need_m())?,
    };
    let mut f = f.to_basis(a.basis.into());
    if let Some(q0) = &a.at_q {
        let q0 = qalg::parse_rational(q0).unwrap_or_else(|e| usage_error(e));
        f = f.specialize(&q0)?;
    }
    let mut out = io::stdout().lock();
    match a.format {
        Format::Text => writeln!(out, "{f}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&f)?)?,
        Format::Tsv => {
            writeln!(out, "basis\tpartition\tcoeff")?;
            for (lambda, c) in f.terms().rev() {
                writeln!(out, "{}\t{lambda}\t{c}", f.basis().letter())?;
            }
        }
    }
    Ok(true)
}

fn check_range(k: usize, lo: usize, hi: usize) -> Result<(), chromsym::Error> {
    if k < lo || k > hi {
        return Err(chromsym::Error::IndexOutOfRange(format!("k = {k} outside {lo}..={hi}")));
    }
    Ok(())
}

fn n_cap() -> usize {
    match std::env::var("CHROMSYM_NMAX") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(c) => c.min(verify::HARD_CAP),
            Err(_) => usage_error(format!("CHROMSYM_NMAX={v:?} is not a size")),
        },
        Err(_) => verify::HARD_CAP,
    }
}

fn run_verify(a: VerifyArgs) -> Outcome {
    let cap = n_cap();
    if a.n > cap {
        usage_error(format!("--n {} exceeds the cap {cap}", a.n));
    }
    let report = verify::run_suite(a.suite, a.n)?;
    let mut out = io::stdout().lock();
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text | Format::Tsv => write_report(&mut out, &report, a.format == Format::Tsv)?,
    }
    Ok(report.passed)
}

fn write_report(out: &mut impl Write, report: &SuiteReport, tsv: bool) -> io::Result<()> {
    if tsv {
        writeln!(out, "status\tcheck\tn\tchecked\tfailures")?;
        for c in &report.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let n = c.n.map(|n| n.to_string()).unwrap_or_default();
            writeln!(out, "{status}\t{}\t{n}\t{}\t{}", c.name, c.checked, c.failures.len())?;
        }
        return Ok(());
    }
    for c in &report.checks {
        match c.n {
            Some(n) => writeln!(out, "{c} (n = {n})")?,
            None => writeln!(out, "{c}")?,
        }
    }
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    let counts: Vec<String> = (1..=report.n_max).rev().map(|n| enumerate_hess(n).len().to_string()).collect();
    let status = if report.passed { "PASS" } else { "FAIL" };
    writeln!(out, "{status}, {} Hessenberg functions checked", counts.join("+"))
}

fn reduce(a: ReduceArgs) -> Outcome {
    let cert = modlaw::reduce(&a.m)?;
    let mut out = io::stdout().lock();
    match a.emit {
        Emit::Text => writeln!(out, "{cert}")?,
        Emit::Json => writeln!(out, "{}", serde_json::to_string_pretty(&cert)?)?,
    }
    Ok(true)
}

fn show(t: &Syt) -> String {
    if t.size() == 0 {
        "∅".into()
    } else {
        t.to_string()
    }
}

fn trace(a: TraceArgs) -> Outcome {
    let Model::Hikita = a.model;
    let nodes = hikita::transition_tree(&a.m)?;
    let mut out = io::stdout().lock();
    match a.format {
        Format::Text => {
            for v in &nodes {
                writeln!(
                    out,
                    "step {}: shape {}  {}  <- {}  k = {}  r = {}  weight = {}  p = {}",
                    v.step,
                    v.child.shape(),
                    show(&v.child),
                    show(&v.parent),
                    v.k,
                    v.r,
                    v.weight,
                    v.prob
                )?;
            }
        }
        Format::Tsv => {
            writeln!(out, "step\tshape\ttableau\tparent\tk\tr\tweight\tp")?;
            for v in &nodes {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    v.step,
                    v.child.shape(),
                    show(&v.child),
                    show(&v.parent),
                    v.k,
                    v.r,
                    v.weight,
                    v.prob
                )?;
            }
        }
        Format::Json => {
            let arr: Vec<_> = nodes
                .iter()
                .map(|v| {
                    json!({
                        "step": v.step,
                        "shape": v.child.shape(),
                        "tableau": v.child.rows(),
                        "parent": v.parent.rows(),
                        "k": v.k,
                        "r": v.r,
                        "weight": v.weight,
                        "p": v.prob,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr)?)?;
        }
    }
    Ok(true)
}
