//! The `llt` command line tool as a library: [`run`] takes the argument
//! vector and returns the exit code with everything written.

mod compute;
mod suites;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use llt_identities::{check_cauchy, g, other_form_constants, Cauchy, VarCounts, VerificationReport};
use llt_shapes::{
    aligned_k_quotient, k_quotient, parse_skew_partition, parse_skew_tuple, parse_tuple, skew_k_quotient, Partition,
    SkewTuple, TupleDisplay,
};
use llt_tableaux::{coinv_llt, count_triples, enum_srt, enum_sssyt, super_ribbon_g};
use serde_json::{json, Value};

pub use compute::{half, lattice_poly, super_by_ribbons, super_by_tableaux, twice_box_values, LatticeType};
pub use suites::{domino_example, triomino_example, run_suite, SuiteOpts, ORDER};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input that does not describe a valid object.
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(
    llt_algebra::AlgebraError,
    llt_shapes::ShapeError,
    llt_tableaux::TableauError,
    llt_lattice::LatticeError,
    llt_identities::IdentityError
);

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "llt", version, about = "Supersymmetric LLT polynomials, lattice models and identity checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Fmt {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    /// Shape such as `((1),(2))`, `(4,2)` or `lam / mu`.
    #[arg(long)]
    shape: String,
    /// Inner shape, if not given after a slash in `--shape`.
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// k-quotient of a partition or skew partition.
    Quotient {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// Coinversion LLT polynomial of a tuple, by tableau enumeration.
    Coinv {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// Super LLT polynomial of a tuple by super tableaux, or with `--k` the
    /// super ribbon function of a partition shape.
    Super {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// Partition function of the W, P or S lattice of a tuple.
    Lattice {
        #[arg(long = "type", default_value = "S")]
        ty: LatticeType,
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// Statistics of a tuple, or with `--k` of a ribbon shape.
    Stats {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// Runs verification suites; `all` runs them in dependency order and
    /// stops at the first failing suite.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the slow cases (YBE at k = 3).
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        fmt: Fmt,
    },
    /// One Cauchy identity as truncated power series.
    Cauchy {
        /// c1, c2, c3, c4 or ss.
        which: Cauchy,
        /// Number of components when `--shape` and `--mu` are absent.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// The tuple nu (defaults to empty partitions).
        #[arg(long)]
        shape: Option<String>,
        /// The tuple mu (defaults to empty partitions).
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[command(flatten)]
        fmt: Fmt,
    },
}

impl ShapeArgs {
    fn tuple(&self) -> Result<SkewTuple, CliError> {
        let s = parse_skew_tuple(&self.shape)?;
        match &self.mu {
            None => Ok(s),
            Some(mu) => {
                if s.mu().iter().any(|p| p.size() > 0) {
                    return Err(CliError::Usage("inner shape given twice".into()));
                }
                Ok(SkewTuple::padded(s.lam().to_vec(), parse_tuple(mu)?)?)
            }
        }
    }

    fn partition(&self) -> Result<(Partition, Partition), CliError> {
        let text = match &self.mu {
            None => self.shape.clone(),
            Some(mu) if !self.shape.contains('/') => format!("{} / {mu}", self.shape),
            Some(_) => return Err(CliError::Usage("inner shape given twice".into())),
        };
        Ok(parse_skew_partition(&text)?)
    }
}

fn emit(out: &mut dyn Write, fmt: Format, text: String, value: Value) -> std::io::Result<()> {
    match fmt {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json value")),
    }
}

fn poly_json(command: &str, shape: &str, p: &llt_algebra::Poly) -> Value {
    json!({"schema": 1, "command": command, "shape": shape, "text": p.to_string(), "terms": p.to_json()})
}

/// Runs `llt` with `argv` (program name first), writing data to `out` and
/// diagnostics to `err`. Exit code 0 on success, 1 when a verification
/// fails, 2 on bad usage.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// [`run_with`] into strings.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    Output { code, stdout: String::from_utf8_lossy(&out).into(), stderr: String::from_utf8_lossy(&err).into() }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Cmd::Quotient { k, shape, fmt } => {
            if k == 0 {
                return Err(CliError::Usage("--k must be positive".into()));
            }
            let (lam, mu) = shape.partition()?;
            let text = if mu.size() == 0 {
                TupleDisplay(&k_quotient(&lam, k)).to_string()
            } else {
                skew_k_quotient(&lam, &mu, k)?.to_string()
            };
            let v = json!({"schema": 1, "command": "quotient", "k": k, "lam": lam.to_string(), "mu": mu.to_string(), "quotient": text});
            emit(out, fmt.format, text, v).map_err(io)?;
        }
        Cmd::Coinv { shape, n, fmt } => {
            let s = shape.tuple()?;
            let p = coinv_llt(&s, n);
            emit(out, fmt.format, p.to_string(), poly_json("coinv", &s.to_string(), &p)).map_err(io)?;
        }
        Cmd::Super { shape, k, n, m, fmt } => {
            let (label, p) = match k {
                Some(k) => {
                    let (lam, mu) = shape.partition()?;
                    (format!("{lam}/{mu} k={k}"), super_ribbon_g(&lam, &mu, k, n, m)?)
                }
                None => {
                    let s = shape.tuple()?;
                    (s.to_string(), super_by_tableaux(&s, n, m)?)
                }
            };
            emit(out, fmt.format, p.to_string(), poly_json("super", &label, &p)).map_err(io)?;
        }
        Cmd::Lattice { ty, shape, n, m, fmt } => {
            let s = shape.tuple()?;
            let p = lattice_poly(&s, ty, n, m)?;
            emit(out, fmt.format, p.to_string(), poly_json("lattice", &s.to_string(), &p)).map_err(io)?;
        }
        Cmd::Stats { shape, k, n, m, fmt } => stats(&shape, k, n, m, fmt.format, out)?,
        Cmd::Verify { suite, k, seed, slow, degree, fmt } => {
            let opts = SuiteOpts { k, slow, seed, degree };
            return verify(&suite, &opts, fmt.format, out, err);
        }
        Cmd::Cauchy { which, k, shape, mu, n, m, p, q, degree, fmt } => {
            let read = |s: &Option<String>| -> Result<Option<Vec<Partition>>, CliError> {
                s.as_deref().map(parse_tuple).transpose().map_err(Into::into)
            };
            let (nu, mu) = (read(&shape)?, read(&mu)?);
            let len = nu.as_ref().or(mu.as_ref()).map_or(k, Vec::len);
            let empty = vec![Partition::zeros(0); len];
            let (nu, mu) = (nu.unwrap_or_else(|| empty.clone()), mu.unwrap_or(empty));
            let r = check_cauchy(which, &mu, &nu, VarCounts { n, m, p, q }, degree)?;
            let code = i32::from(!r.pass);
            report_lines(std::slice::from_ref(&r), fmt.format, out)?;
            return Ok(code);
        }
    }
    Ok(0)
}

fn stats(shape: &ShapeArgs, k: Option<usize>, n: usize, m: usize, fmt: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let (text, v) = match k {
        Some(k) => {
            let (lam, mu) = shape.partition()?;
            let q = aligned_k_quotient(&lam, &mu, k)?;
            let srt = enum_srt(&lam, &mu, k, n, m)?;
            let boxes = twice_box_values(&lam, &mu, k, n, m)?;
            let g_diff = g(q.lam())? - g(q.mu())?;
            let other = other_form_constants(&lam, &mu, k, n)?;
            let box_text = match boxes.as_slice() {
                [] => "none".to_string(),
                [b] => half(*b),
                many => format!("not constant: {many:?}"),
            };
            let spins: Vec<usize> = srt.iter().map(|t| t.spin()).collect();
            let mut lines = vec![
                format!("shape: {lam}/{mu}"),
                format!("k: {k}"),
                format!("quotient: {q}"),
                format!("ribbon tableaux (n={n}, m={m}): {}", srt.len()),
                match (spins.iter().min(), spins.iter().max()) {
                    (Some(a), Some(b)) => format!("spin range: {a}..={b}"),
                    _ => "spin range: none".to_string(),
                },
                format!("box: {box_text}"),
                format!("g(lam) - g(mu): {g_diff}"),
            ];
            if let Some(o) = &other {
                lines.push(format!(
                    "triples: {}, max inv: {}, min coinv: {}, star: {}, dagger: {}",
                    o.triples,
                    o.max_inv,
                    o.min_coinv,
                    half(o.twice_star),
                    half(o.twice_dagger)
                ));
            }
            let v = json!({
                "schema": 1, "command": "stats", "lam": lam.to_string(), "mu": mu.to_string(), "k": k,
                "quotient": q.to_string(), "ribbon_tableaux": srt.len(), "twice_box": boxes,
                "g_difference": g_diff, "other_forms": other,
            });
            (lines.join("\n"), v)
        }
        None => {
            let s = shape.tuple()?;
            let g_diff = g(s.lam())? - g(s.mu())?;
            let triples = count_triples(&s);
            let count = enum_sssyt(&s, n, m).len();
            let text = format!(
                "shape: {s}\ncells: {}\ntriples: {triples}\ng(lam) - g(mu): {g_diff}\nsuper tableaux (n={n}, m={m}): {count}",
                s.size()
            );
            let v = json!({
                "schema": 1, "command": "stats", "shape": s.to_string(), "cells": s.size(), "triples": triples,
                "g_difference": g_diff, "super_tableaux": count,
            });
            (text, v)
        }
    };
    emit(out, fmt, text, v).map_err(io)
}

fn report_lines(reports: &[VerificationReport], fmt: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match fmt {
        Format::Json => {
            let v = json!({"schema": 1, "reports": reports});
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)
        }
        Format::Text => {
            for r in reports {
                match &r.witness {
                    None => writeln!(out, "PASS {} {}", r.id, r.instance),
                    Some(w) => writeln!(out, "FAIL {} {}: {w}", r.id, r.instance),
                }
                .map_err(io)?;
            }
            Ok(())
        }
    }
}

fn verify(name: &str, opts: &SuiteOpts, fmt: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let names: Vec<&str> = if name == "all" { ORDER.to_vec() } else { vec![name] };
    if let Some(bad) = names.iter().find(|n| !ORDER.contains(n)) {
        return Err(CliError::Usage(format!("unknown suite `{bad}`; expected all or one of {}", ORDER.join(", "))));
    }
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut ok = true;
    for n in names {
        if !ok {
            skipped.push(n);
            continue;
        }
        let _ = writeln!(err, "running {n}");
        let reports = run_suite(n, opts)?;
        ok = reports.iter().all(|r| r.pass);
        results.push((n, reports));
    }
    let mut summary = Vec::new();
    for (n, reports) in &results {
        let failed = reports.iter().filter(|r| !r.pass).count();
        summary.push(format!("{n}: {}/{} passed", reports.len() - failed, reports.len()));
        for r in reports.iter().filter(|r| !r.pass) {
            summary.push(format!("  FAIL {} {}: {}", r.id, r.instance, r.witness.as_deref().unwrap_or("")));
        }
    }
    for n in &skipped {
        summary.push(format!("{n}: skipped after an earlier failure"));
    }
    match fmt {
        Format::Text => {
            for line in &summary {
                writeln!(out, "{line}").map_err(io)?;
            }
        }
        Format::Json => {
            let suites: Vec<Value> = results
                .iter()
                .map(|(n, reports)| {
                    let failed = reports.iter().filter(|r| !r.pass).count();
                    json!({"suite": n, "total": reports.len(), "failed": failed, "reports": reports})
                })
                .collect();
            let v = json!({"schema": 1, "command": "verify", "seed": opts.seed, "pass": ok, "suites": suites, "skipped": skipped});
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            for line in &summary {
                let _ = writeln!(err, "{line}");
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}
